/*
Copyright 2026 The metricdim Authors

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

#include "metricdim/bounds.hpp"
#include "metricdim/characterizations.hpp"
#include "metricdim/constructions.hpp"
#include "metricdim/distance.hpp"
#include "metricdim/enumerator.hpp"
#include "metricdim/error.hpp"
#include "metricdim/graph.hpp"
#include "metricdim/graph6.hpp"
#include "metricdim/invariants.hpp"
#include "metricdim/metric.hpp"
#include "metricdim/solver.hpp"
#include "metricdim/sweep.hpp"
#include "metricdim/vertex_set.hpp"
