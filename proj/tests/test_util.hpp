/*
   Copyright 2026 The ftmod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FTMOD_TESTS_TEST_UTIL_HPP
#define FTMOD_TESTS_TEST_UTIL_HPP

#include <string>
#include <variant>

#include "ftmod/ftmod.hpp"

namespace ftmod::testing {

inline GF::field_ptr gf(const std::string& h) { return std::get<GF::field_ptr>(parse_field(h)); }
inline RF::field_ptr rf(const std::string& h = "GF(3)(th)") { return std::get<RF::field_ptr>(parse_field(h)); }
inline FT::field_ptr ft(const std::string& h = "FTF(3; gens=a,b; inv=a)") {
    return std::get<FT::field_ptr>(parse_field(h));
}

template <class K>
TModule<K> mod(const typename K::field_ptr& f, const std::string& text) {
    return TModule<K>(parse_matrix<K>(f, text, detect_var(text)));
}

template <class K>
SkewMatrix<K> mat(const typename K::field_ptr& f, const std::string& text) {
    return parse_matrix<K>(f, text, detect_var(text));
}

template <class K>
SkewPoly<K> poly(const typename K::field_ptr& f, const std::string& text) {
    return parse_poly<K>(f, text, detect_var(text));
}

}  // namespace ftmod::testing

#endif
