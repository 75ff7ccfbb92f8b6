/*
 * Copyright 2026 The ahg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef AHG_AHG_HPP
#define AHG_AHG_HPP

#include "ahg/alpha.hpp"
#include "ahg/bounds.hpp"
#include "ahg/efficiency.hpp"
#include "ahg/errors.hpp"
#include "ahg/game.hpp"
#include "ahg/generators.hpp"
#include "ahg/lp.hpp"
#include "ahg/rational.hpp"
#include "ahg/search.hpp"
#include "ahg/stability.hpp"
#include "ahg/subsets.hpp"

#endif // AHG_AHG_HPP
