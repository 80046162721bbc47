// Copyright 2026 The blockest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLOCKEST_BLOCKEST_HPP
#define BLOCKEST_BLOCKEST_HPP

#include "blockest/algorithms.hpp"
#include "blockest/block_encoding.hpp"
#include "blockest/chebyshev.hpp"
#include "blockest/complexity.hpp"
#include "blockest/error.hpp"
#include "blockest/estimation.hpp"
#include "blockest/linalg.hpp"
#include "blockest/oracle.hpp"
#include "blockest/pauli.hpp"
#include "blockest/spectral_transform.hpp"
#include "blockest/state_prep.hpp"

#endif  // BLOCKEST_BLOCKEST_HPP
