/*
   Copyright 2026 the pisotbeta authors

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

#pragma once

#include <pisot/catalog.hpp>
#include <pisot/companion.hpp>
#include <pisot/cyclotomic.hpp>
#include <pisot/expansion_word.hpp>
#include <pisot/family.hpp>
#include <pisot/greedy.hpp>
#include <pisot/interval.hpp>
#include <pisot/numeric.hpp>
#include <pisot/pisot_check.hpp>
#include <pisot/polynomial.hpp>
#include <pisot/rational_function.hpp>
#include <pisot/real_algebraic.hpp>
#include <pisot/render.hpp>
#include <pisot/sweep.hpp>
