/*
 * Copyright 2026 The pftrace Authors
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

#pragma once

#include "pftrace/combinatorics.hpp"
#include "pftrace/elimination.hpp"
#include "pftrace/errors.hpp"
#include "pftrace/matrix.hpp"
#include "pftrace/oracles.hpp"
#include "pftrace/random.hpp"
#include "pftrace/scalar.hpp"
#include "pftrace/trace_identities.hpp"
