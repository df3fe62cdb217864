#pragma once

#include <map>
#include <string>
#include <vector>

// Closed-form Poincare coefficient lists frozen from an independent
// reference implementation (sympy).  Keys are comma-joined 1-based theta
// inclusion indices; "" is the empty set.  Values are coefficient lists,
// constant term first.  Maps for type D omit the theta sets that have no
// closed form (both fork ends included, proper subset).
namespace fixtures {

using CoeffMap = std::map<std::string, std::vector<long long>>;

inline const CoeffMap& f4() {
    static const CoeffMap m = {
        {"", {1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 2, 1, 0, 1, 2, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1}},
        {"1", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"2", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"3", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"4", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"1,2", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"1,3", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"1,4", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"2,3", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"2,4", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"3,4", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"1,2,3", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"1,2,4", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"1,3,4", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"2,3,4", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"1,2,3,4", {1}},
    };
    return m;
}

inline const CoeffMap& e6() {
    static const CoeffMap m = {
        {"", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"1", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"2", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"3", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"4", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"5", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"6", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"1,2", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"1,3", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"1,4", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"1,5", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"1,6", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"2,3", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"2,4", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"2,5", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"2,6", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"3,4", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"3,5", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"3,6", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"4,5", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"4,6", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"5,6", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"1,2,3", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"1,2,4", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"1,2,5", {1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1}},
        {"1,2,6", {1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1}},
        {"1,3,4", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"1,3,5", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"1,3,6", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"1,4,5", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"1,4,6", {1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1}},
        {"1,5,6", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"2,3,4", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"2,3,5", {1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1}},
        {"2,3,6", {1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1}},
        {"2,4,5", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"2,4,6", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"2,5,6", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"3,4,5", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"3,4,6", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"3,5,6", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"4,5,6", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"1,2,3,4", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"1,2,3,5", {1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1}},
        {"1,2,3,6", {1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1}},
        {"1,2,4,5", {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"1,2,4,6", {1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1}},
        {"1,2,5,6", {1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1}},
        {"1,3,4,5", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"1,3,4,6", {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"1,3,5,6", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"1,4,5,6", {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"2,3,4,5", {1, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"2,3,4,6", {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"2,3,5,6", {1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1}},
        {"2,4,5,6", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"3,4,5,6", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"1,2,3,4,5", {1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"1,2,3,4,6", {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"1,2,3,5,6", {1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1}},
        {"1,2,4,5,6", {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"1,3,4,5,6", {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"2,3,4,5,6", {1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"1,2,3,4,5,6", {1}},
    };
    return m;
}

inline const CoeffMap& e7() {
    static const CoeffMap m = {
        {"2,3,4,5,6,7", {1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1}},
        {"1,2,3,4,5,7", {1, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 1, 2, 0, 1, 0, 3, 0, 1, 0, 2, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}},
        {"1,2,4,5,6,7", {1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 2, 0, 1, 0, 2, 0, 1, 0, 1, 1, 1, 1, 0, 1, 0, 2, 0, 1, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"2,3,4,5,7", {1, 0, 0, 0, 1, 0, 0, 0, 3, 0, 0, 0, 2, 1, 0, 0, 3, 2, 0, 1, 1, 4, 0, 1, 1, 4, 0, 2, 0, 4, 1, 1, 1, 2, 1, 1, 1, 1, 2, 0, 2, 0, 1, 0, 1, 0, 1, 0, 1}},
        {"1,2,3,4,5,6", {1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {"1,2,3,4,5", {1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 2, 1, 0, 1, 1, 1, 0, 0, 2, 2, 0, 0, 1, 1, 1, 0, 1, 2, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 1}},
        {"2,3,4,5", {1, 0, 0, 0, 0, 1, 0, 0, 2, 1, 0, 0, 0, 3, 1, 0, 2, 2, 1, 0, 0, 4, 3, 0, 1, 2, 2, 1, 0, 3, 4, 0, 0, 1, 2, 2, 0, 1, 3, 0, 0, 0, 1, 2, 0, 0, 1, 0, 0, 0, 0, 1}},
        {"1,3,4,5,6,7", {1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {"1,2,3,4,5,6,7", {1}},
        {"2,3,5,6,7", {1, 0, 0, 0, 2, 0, 0, 0, 3, 1, 0, 0, 2, 3, 0, 1, 1, 5, 0, 2, 0, 5, 1, 3, 1, 3, 2, 2, 3, 1, 3, 1, 5, 0, 2, 0, 5, 1, 1, 0, 3, 2, 0, 0, 1, 3, 0, 0, 0, 2, 0, 0, 0, 1}},
        {"2,4,5,6,7", {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"2,3,5,7", {1, 0, 0, 0, 3, 0, 0, 0, 5, 1, 0, 0, 5, 4, 0, 1, 3, 8, 0, 3, 1, 10, 1, 5, 1, 8, 3, 5, 4, 4, 5, 3, 8, 1, 5, 1, 10, 1, 3, 0, 8, 3, 1, 0, 4, 5, 0, 0, 1, 5, 0, 0, 0, 3, 0, 0, 0, 1}},
        {"2,4,5,7", {1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 2, 1, 1, 1, 1, 3, 0, 2, 0, 4, 0, 2, 0, 3, 1, 1, 1, 1, 2, 0, 2, 0, 2, 0, 2, 0, 1, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"1,2,5,6,7", {1, 0, 0, 0, 2, 0, 0, 0, 3, 1, 0, 0, 2, 3, 0, 1, 1, 5, 0, 2, 0, 5, 1, 3, 1, 3, 2, 2, 3, 1, 3, 1, 5, 0, 2, 0, 5, 1, 1, 0, 3, 2, 0, 0, 1, 3, 0, 0, 0, 2, 0, 0, 0, 1}},
        {"1,2,5,7", {1, 0, 0, 0, 3, 0, 0, 0, 5, 1, 0, 0, 5, 4, 0, 1, 3, 8, 0, 3, 1, 10, 1, 5, 1, 8, 3, 5, 4, 4, 5, 3, 8, 1, 5, 1, 10, 1, 3, 0, 8, 3, 1, 0, 4, 5, 0, 0, 1, 5, 0, 0, 0, 3, 0, 0, 0, 1}},
        {"1,2,3,5,7", {1, 0, 0, 0, 3, 0, 0, 0, 5, 1, 0, 0, 5, 4, 0, 1, 3, 8, 0, 3, 1, 10, 1, 5, 1, 8, 3, 5, 4, 4, 5, 3, 8, 1, 5, 1, 10, 1, 3, 0, 8, 3, 1, 0, 4, 5, 0, 0, 1, 5, 0, 0, 0, 3, 0, 0, 0, 1}},
        {"1,2,3,5,6,7", {1, 0, 0, 0, 2, 0, 0, 0, 3, 1, 0, 0, 2, 3, 0, 1, 1, 5, 0, 2, 0, 5, 1, 3, 1, 3, 2, 2, 3, 1, 3, 1, 5, 0, 2, 0, 5, 1, 1, 0, 3, 2, 0, 0, 1, 3, 0, 0, 0, 2, 0, 0, 0, 1}},
        {"2,5,7", {1, 0, 0, 0, 2, 0, 0, 0, 2, 1, 0, 1, 1, 3, 0, 3, 0, 4, 0, 4, 1, 3, 1, 3, 4, 1, 3, 1, 7, 0, 4, 0, 7, 1, 3, 1, 4, 3, 1, 3, 1, 4, 0, 4, 0, 3, 0, 3, 1, 1, 0, 1, 2, 0, 0, 0, 2, 0, 0, 0, 1}},
        {"2,5,6,7", {1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 2, 1, 1, 1, 1, 3, 0, 2, 0, 4, 0, 2, 0, 3, 1, 1, 1, 1, 2, 0, 2, 0, 2, 0, 2, 0, 1, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"2,3,4,5,6", {1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 2, 1, 0, 1, 1, 1, 0, 0, 2, 2, 0, 0, 1, 1, 1, 0, 1, 2, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 1}},
        {"1,3,5,6,7", {1, 0, 0, 0, 1, 1, 0, 0, 1, 2, 0, 0, 0, 3, 1, 1, 0, 2, 2, 1, 1, 1, 3, 1, 2, 0, 2, 1, 3, 1, 1, 1, 2, 2, 0, 1, 1, 3, 0, 0, 0, 2, 1, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"4,6", {1, 0, 0, 0, 1, 1, 0, 0, 0, 2, 0, 1, 0, 2, 1, 2, 1, 1, 2, 1, 3, 0, 2, 0, 4, 1, 2, 1, 3, 3, 1, 2, 1, 4, 0, 2, 0, 3, 1, 2, 1, 1, 2, 1, 2, 0, 1, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"", {1, 0, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 2, 1, 2, 2, 3, 1, 3, 2, 3, 3, 2, 4, 3, 4, 2, 5, 3, 4, 3, 4, 4, 3, 4, 3, 5, 2, 4, 3, 4, 2, 3, 3, 2, 3, 1, 3, 2, 2, 1, 2, 1, 1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1}},
    };
    return m;
}

inline const CoeffMap& a5() {
    static const CoeffMap m = {
        {"", {1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 0, 1}},
        {"1", {1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"2", {1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"3", {1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"4", {1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"5", {1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"1,2", {1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"1,3", {1, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"1,4", {1, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"1,5", {1, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"2,3", {1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"2,4", {1, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"2,5", {1, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"3,4", {1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"3,5", {1, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"4,5", {1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"1,2,3", {1, 0, 0, 0, 0, 1}},
        {"1,2,4", {1, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"1,2,5", {1, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"1,3,4", {1, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"1,3,5", {1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1}},
        {"1,4,5", {1, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"2,3,4", {1, 0, 0, 0, 0, 1}},
        {"2,3,5", {1, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"2,4,5", {1, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"3,4,5", {1, 0, 0, 0, 0, 1}},
        {"1,2,3,4", {1, 0, 0, 0, 0, 1}},
        {"1,2,3,5", {1, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"1,2,4,5", {1, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"1,3,4,5", {1, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"2,3,4,5", {1, 0, 0, 0, 0, 1}},
        {"1,2,3,4,5", {1}},
    };
    return m;
}

inline const CoeffMap& b4() {
    static const CoeffMap m = {
        {"", {1, 0, 0, 3, 0, 0, 3, 1, 0, 1, 3, 0, 0, 3, 0, 0, 1}},
        {"1", {1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1}},
        {"2", {1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1}},
        {"3", {1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1}},
        {"4", {1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1}},
        {"1,2", {1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1}},
        {"1,3", {1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 1}},
        {"1,4", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"2,3", {1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1}},
        {"2,4", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"3,4", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"1,2,3", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"1,2,4", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"1,3,4", {1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1}},
        {"2,3,4", {1, 0, 0, 1}},
        {"1,2,3,4", {1}},
    };
    return m;
}

inline const CoeffMap& c4() {
    static const CoeffMap m = {
        {"", {1, 1, 0, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 0, 1, 1}},
        {"1", {1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1}},
        {"2", {1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1}},
        {"3", {1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1}},
        {"4", {1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 0, 1}},
        {"1,2", {1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1}},
        {"1,3", {1, 1, 0, 0, 1, 2, 1, 0, 0, 1, 1}},
        {"1,4", {1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"2,3", {1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1}},
        {"2,4", {1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"3,4", {1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"1,2,3", {1, 1, 0, 0, 0, 1, 1}},
        {"1,2,4", {1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"1,3,4", {1, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"2,3,4", {1, 0, 0, 0, 0, 0, 0, 1}},
        {"1,2,3,4", {1}},
    };
    return m;
}

inline const CoeffMap& d4() {
    static const CoeffMap m = {
        {"", {1, 0, 0, 4, 0, 0, 6, 0, 0, 4, 0, 0, 1}},
        {"1", {1, 0, 0, 3, 0, 0, 3, 0, 0, 1}},
        {"2", {1, 0, 0, 3, 0, 0, 3, 0, 0, 1}},
        {"3", {1, 0, 0, 3, 0, 0, 3, 0, 0, 1}},
        {"4", {1, 0, 0, 3, 0, 0, 3, 0, 0, 1}},
        {"1,2", {1, 0, 0, 3, 0, 0, 3, 0, 0, 1}},
        {"1,3", {1, 0, 0, 2, 1, 0, 1, 2, 0, 0, 1}},
        {"1,4", {1, 0, 0, 2, 1, 0, 1, 2, 0, 0, 1}},
        {"2,3", {1, 0, 0, 3, 0, 0, 3, 0, 0, 1}},
        {"2,4", {1, 0, 0, 3, 0, 0, 3, 0, 0, 1}},
        {"1,2,3", {1, 0, 0, 2, 0, 0, 1}},
        {"1,2,4", {1, 0, 0, 2, 0, 0, 1}},
        {"1,2,3,4", {1}},
    };
    return m;
}

inline const CoeffMap& b5() {
    static const CoeffMap m = {
        {"", {1, 0, 0, 2, 0, 1, 1, 2, 2, 0, 4, 1, 2, 2, 1, 4, 0, 2, 2, 1, 1, 0, 2, 0, 0, 1}},
        {"1", {1, 0, 0, 1, 0, 1, 0, 2, 1, 0, 2, 0, 2, 0, 1, 2, 0, 1, 0, 1, 0, 0, 1}},
        {"2", {1, 0, 0, 1, 0, 1, 0, 2, 1, 0, 2, 0, 2, 0, 1, 2, 0, 1, 0, 1, 0, 0, 1}},
        {"3", {1, 0, 0, 1, 0, 1, 0, 2, 1, 0, 2, 0, 2, 0, 1, 2, 0, 1, 0, 1, 0, 0, 1}},
        {"4", {1, 0, 0, 1, 0, 1, 0, 2, 1, 0, 2, 0, 2, 0, 1, 2, 0, 1, 0, 1, 0, 0, 1}},
        {"5", {1, 0, 0, 1, 0, 1, 0, 2, 1, 0, 2, 0, 2, 0, 1, 2, 0, 1, 0, 1, 0, 0, 1}},
        {"1,2", {1, 0, 0, 1, 0, 1, 0, 2, 1, 0, 2, 0, 2, 0, 1, 2, 0, 1, 0, 1, 0, 0, 1}},
        {"1,3", {1, 0, 0, 1, 1, 1, 0, 2, 1, 1, 1, 1, 2, 0, 1, 1, 1, 0, 0, 1}},
        {"1,4", {1, 0, 0, 1, 1, 1, 0, 2, 1, 1, 1, 1, 2, 0, 1, 1, 1, 0, 0, 1}},
        {"1,5", {1, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 0, 2, 0, 1, 0, 0, 0, 0, 1}},
        {"2,3", {1, 0, 0, 1, 0, 1, 0, 2, 1, 0, 2, 0, 2, 0, 1, 2, 0, 1, 0, 1, 0, 0, 1}},
        {"2,4", {1, 0, 0, 1, 1, 1, 0, 2, 1, 1, 1, 1, 2, 0, 1, 1, 1, 0, 0, 1}},
        {"2,5", {1, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 0, 2, 0, 1, 0, 0, 0, 0, 1}},
        {"3,4", {1, 0, 0, 1, 0, 1, 0, 2, 1, 0, 2, 0, 2, 0, 1, 2, 0, 1, 0, 1, 0, 0, 1}},
        {"3,5", {1, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 0, 2, 0, 1, 0, 0, 0, 0, 1}},
        {"4,5", {1, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 0, 2, 0, 1, 0, 0, 0, 0, 1}},
        {"1,2,3", {1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 0, 1}},
        {"1,2,4", {1, 0, 0, 1, 1, 1, 0, 2, 1, 1, 1, 1, 2, 0, 1, 1, 1, 0, 0, 1}},
        {"1,2,5", {1, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 0, 2, 0, 1, 0, 0, 0, 0, 1}},
        {"1,3,4", {1, 0, 0, 1, 1, 1, 0, 2, 1, 1, 1, 1, 2, 0, 1, 1, 1, 0, 0, 1}},
        {"1,3,5", {1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1}},
        {"1,4,5", {1, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 1}},
        {"2,3,4", {1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 0, 1}},
        {"2,3,5", {1, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 0, 2, 0, 1, 0, 0, 0, 0, 1}},
        {"2,4,5", {1, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 1}},
        {"3,4,5", {1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"1,2,3,4", {1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 0, 1}},
        {"1,2,3,5", {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"1,2,4,5", {1, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 1}},
        {"1,3,4,5", {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"2,3,4,5", {1, 0, 0, 0, 0, 1}},
        {"1,2,3,4,5", {1}},
    };
    return m;
}

inline const CoeffMap& c5() {
    static const CoeffMap m = {
        {"", {1, 1, 0, 1, 1, 1, 1, 1, 2, 2, 2, 1, 2, 2, 1, 2, 2, 2, 1, 1, 1, 1, 1, 0, 1, 1}},
        {"1", {1, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 1}},
        {"2", {1, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 1}},
        {"3", {1, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 1}},
        {"4", {1, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 1}},
        {"5", {1, 0, 0, 1, 0, 1, 0, 1, 1, 1, 1, 0, 2, 0, 1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1}},
        {"1,2", {1, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 1}},
        {"1,3", {1, 1, 0, 0, 1, 2, 1, 0, 0, 2, 2, 0, 0, 1, 2, 1, 0, 0, 1, 1}},
        {"1,4", {1, 1, 0, 0, 1, 2, 1, 0, 0, 2, 2, 0, 0, 1, 2, 1, 0, 0, 1, 1}},
        {"1,5", {1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"2,3", {1, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 1}},
        {"2,4", {1, 1, 0, 0, 1, 2, 1, 0, 0, 2, 2, 0, 0, 1, 2, 1, 0, 0, 1, 1}},
        {"2,5", {1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"3,4", {1, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 1}},
        {"3,5", {1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"4,5", {1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"1,2,3", {1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 1}},
        {"1,2,4", {1, 1, 0, 0, 1, 2, 1, 0, 0, 2, 2, 0, 0, 1, 2, 1, 0, 0, 1, 1}},
        {"1,2,5", {1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"1,3,4", {1, 1, 0, 0, 1, 2, 1, 0, 0, 2, 2, 0, 0, 1, 2, 1, 0, 0, 1, 1}},
        {"1,3,5", {1, 0, 0, 0, 1, 1, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"1,4,5", {1, 0, 0, 0, 1, 1, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"2,3,4", {1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 1}},
        {"2,3,5", {1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 1}},
        {"2,4,5", {1, 0, 0, 0, 1, 1, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"3,4,5", {1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {"1,2,3,4", {1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 1}},
        {"1,2,3,5", {1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {"1,2,4,5", {1, 0, 0, 0, 1, 1, 0, 0, 0, 2, 0, 0, 0, 1, 1, 0, 0, 0, 1}},
        {"1,3,4,5", {1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1}},
        {"2,3,4,5", {1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {"1,2,3,4,5", {1}},
    };
    return m;
}

inline const CoeffMap& d5() {
    static const CoeffMap m = {
        {"", {1, 0, 0, 2, 0, 0, 1, 2, 0, 0, 4, 0, 0, 2, 1, 0, 0, 2, 0, 0, 1}},
        {"1", {1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1}},
        {"2", {1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1}},
        {"3", {1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1}},
        {"4", {1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1}},
        {"5", {1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1}},
        {"1,2", {1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1}},
        {"1,3", {1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 1}},
        {"1,4", {1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 1}},
        {"1,5", {1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 1}},
        {"2,3", {1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1}},
        {"2,4", {1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 1}},
        {"2,5", {1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 1}},
        {"3,4", {1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1}},
        {"3,5", {1, 0, 0, 1, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 1, 0, 0, 1}},
        {"1,2,3", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"1,2,4", {1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 1}},
        {"1,2,5", {1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 1}},
        {"1,3,4", {1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 1}},
        {"1,3,5", {1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 1, 1, 0, 0, 1}},
        {"2,3,4", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"2,3,5", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"1,2,3,4", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"1,2,3,5", {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1}},
        {"1,2,3,4,5", {1}},
    };
    return m;
}

} // namespace fixtures
