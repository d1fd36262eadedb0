#ifndef TZETA_TEST_UTIL_HPP
#define TZETA_TEST_UTIL_HPP

#include <doctest.h>

#include <string>

#include "tzeta/real.hpp"

namespace tzeta::testutil {

inline void check_close(const Real& got, const Real& want, double slack_factor = 10.0) {
    double diff = (got - want).abs().to_double();
    double allow = (got.error_bound() + want.error_bound()) * slack_factor + 1e-60;
    INFO("got  " << got.str(30));
    INFO("want " << want.str(30));
    INFO("diff " << diff << " allow " << allow);
    CHECK(diff <= allow);
}

inline void check_close_abs(const Real& got, const Real& want, double tol) {
    double diff = (got - want).abs().to_double();
    INFO("got  " << got.str(30));
    INFO("want " << want.str(30));
    INFO("diff " << diff << " tol " << tol);
    CHECK(diff <= tol);
}

}  // namespace tzeta::testutil

#endif
