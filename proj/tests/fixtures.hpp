#pragma once

#include "conekit/exactalg.hpp"
#include "conekit/geometry.hpp"

#include <string>
#include <vector>

namespace fixture {

inline conekit::Rational q(const std::string& s) { return conekit::parse_rational(s); }

inline conekit::Poly poly(const std::vector<std::string>& c) {
    std::vector<conekit::Rational> v;
    for (const auto& s : c) v.push_back(q(s));
    return conekit::Poly(std::move(v));
}

inline std::vector<conekit::KEFactor> p1_pair(long l1, long l2) {
    return {{1, 1, l1}, {1, 1, l2}};
}

inline std::vector<conekit::KEFactor> pair_m1_2() { return p1_pair(-1, 2); }
inline std::vector<conekit::KEFactor> pair_m2_1() { return p1_pair(-2, 1); }
inline std::vector<conekit::KEFactor> trivial() { return p1_pair(0, 0); }
inline std::vector<conekit::KEFactor> mixed() { return {{2, conekit::ratio(1, 2), 3}, {1, 2, -1}}; }

inline conekit::MomentumData data(std::vector<conekit::KEFactor> f, const std::string& b) {
    return conekit::build_momentum_data(conekit::build_setup(std::move(f), q(b)));
}

}  // namespace fixture
