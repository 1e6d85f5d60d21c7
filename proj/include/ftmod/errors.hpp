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

#ifndef FTMOD_ERRORS_HPP
#define FTMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ftmod {

// Every library failure carries a stable machine-readable code.
class Error : public std::runtime_error {
   public:
    Error(std::string code, const std::string& what) : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

   private:
    std::string code_;
};

#define FTMOD_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                             \
       public:                                                              \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    };

FTMOD_DEFINE_ERROR(NotAQthPower)
FTMOD_DEFINE_ERROR(DivisionByZero)
FTMOD_DEFINE_ERROR(MixedFields)
FTMOD_DEFINE_ERROR(NonMonomialDenominator)
FTMOD_DEFINE_ERROR(InvalidField)
FTMOD_DEFINE_ERROR(DimensionMismatch)
FTMOD_DEFINE_ERROR(ZeroLeading)
FTMOD_DEFINE_ERROR(RankZero)
FTMOD_DEFINE_ERROR(NotNilpotent)
FTMOD_DEFINE_ERROR(NotAMorphism)
FTMOD_DEFINE_ERROR(NotInConstantField)
FTMOD_DEFINE_ERROR(UnsupportedRegime)
FTMOD_DEFINE_ERROR(SingularLeading)
FTMOD_DEFINE_ERROR(MixedPairs)
FTMOD_DEFINE_ERROR(UnboundedSearch)
FTMOD_DEFINE_ERROR(CarrierTooLarge)
FTMOD_DEFINE_ERROR(ParseError)
FTMOD_DEFINE_ERROR(DegreeOverflow)

#undef FTMOD_DEFINE_ERROR

}  // namespace ftmod

#endif
