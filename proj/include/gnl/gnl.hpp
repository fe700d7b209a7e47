// Copyright 2026 The gnl Authors
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

#pragma once

#include "gnl/constructors/bipartite.hpp"
#include "gnl/constructors/compose.hpp"
#include "gnl/constructors/synthesize.hpp"
#include "gnl/constructors/tripartite.hpp"
#include "gnl/constructors/ufl.hpp"
#include "gnl/errors.hpp"
#include "gnl/numerics.hpp"
#include "gnl/partition_graph.hpp"
#include "gnl/plan.hpp"
#include "gnl/plan_io.hpp"
#include "gnl/state_io.hpp"
#include "gnl/states.hpp"
#include "gnl/verifier/certificate.hpp"
#include "gnl/verifier/opm.hpp"
#include "gnl/verifier/orthogonality.hpp"
#include "gnl/verifier/report.hpp"
