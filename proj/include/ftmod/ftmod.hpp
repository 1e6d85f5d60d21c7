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

#ifndef FTMOD_FTMOD_HPP
#define FTMOD_FTMOD_HPP

#include "errors.hpp"
#include "gf.hpp"
#include "ratfunc.hpp"
#include "formal.hpp"
#include "skewpoly.hpp"
#include "tmodule.hpp"
#include "biderivation.hpp"
#include "ext_structure.hpp"
#include "fp_linalg.hpp"
#include "homological.hpp"
#include "oracle.hpp"
#include "parse.hpp"

#endif
