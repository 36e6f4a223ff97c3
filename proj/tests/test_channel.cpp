#include <doctest.h>

#include "hfss/channel.hpp"
#include "hfss/errors.hpp"
#include "test_util.hpp"

using namespace hfss;

TEST_CASE("effective gain matches hand-computed values") {
    ChannelState ch = test::reference_channel();
    CHECK(effective_gain(ch, 0.0).value == 1.0);
    CHECK(effective_gain(ch, 10.0).value == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

    ch.h_p = 0.0;
    CHECK(effective_gain(ch, 0.0).value == 0.0);
    CHECK(effective_gain(ch, 123.0).value == 0.0);
}

TEST_CASE("effective gain at zero CR power is h_p / sigma_p2 exactly") {
    ChannelState ch = test::reference_channel();
    ch.h_p = 2.75;
    ch.sigma_p2 = 0.4;
    CHECK(effective_gain(ch, 0.0).value == ch.h_p / ch.sigma_p2);
}

TEST_CASE("effective gain is strictly decreasing in CR power when coupled") {
    ChannelState ch = test::reference_channel();
    double prev = effective_gain(ch, 0.0).value;
    for (double p : test::linspace(0.5, 50.0, 100)) {
        const double g = effective_gain(ch, p).value;
        CHECK(g < prev);
        prev = g;
    }
}

TEST_CASE("effective gain is constant in CR power when decoupled") {
    ChannelState ch = test::reference_channel();
    ch.h_cp = 0.0;
    const double at_zero = effective_gain(ch, 0.0).value;
    for (double p : test::linspace(0.0, 100.0, 11)) {
        CHECK(effective_gain(ch, p).value == at_zero);
    }
}

TEST_CASE("channel validation rejects bad states") {
    ChannelState ch = test::reference_channel();
    ch.h_cp = -0.1;
    CHECK_THROWS_AS(validate(ch), precondition_error);

    ch = test::reference_channel();
    ch.sigma_p2 = 0.0;
    CHECK_THROWS_AS(validate(ch), precondition_error);

    ch = test::reference_channel();
    CHECK_THROWS_AS(effective_gain(ch, -1.0), precondition_error);
}
