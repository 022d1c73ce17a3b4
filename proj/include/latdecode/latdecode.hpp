// Copyright 2026 The latdecode Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LATDECODE_LATDECODE_HPP_
#define LATDECODE_LATDECODE_HPP_

#include "latdecode/automaton.hpp"
#include "latdecode/determinize.hpp"
#include "latdecode/errors.hpp"
#include "latdecode/lattice_gen.hpp"
#include "latdecode/oracle.hpp"
#include "latdecode/search.hpp"
#include "latdecode/semiring.hpp"
#include "latdecode/shortest_distance.hpp"
#include "latdecode/text_format.hpp"

#endif  // LATDECODE_LATDECODE_HPP_
