// Copyright 2026 The cqec authors
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

// cqec.hpp — umbrella header.

#pragma once

#include "cqec/analysis.hpp"
#include "cqec/codes.hpp"
#include "cqec/error_classes.hpp"
#include "cqec/kernels.hpp"
#include "cqec/lindblad.hpp"
#include "cqec/numerics.hpp"
#include "cqec/operators.hpp"
#include "cqec/pauli.hpp"
#include "cqec/pmme.hpp"
#include "cqec/xxbath.hpp"
