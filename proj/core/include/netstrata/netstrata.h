// Copyright 2026 The Netstrata Authors
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

#ifndef NETSTRATA_NETSTRATA_H_
#define NETSTRATA_NETSTRATA_H_

#include "netstrata/analysis.h"
#include "netstrata/consistency.h"
#include "netstrata/dot_export.h"
#include "netstrata/fault_sim.h"
#include "netstrata/model.h"
#include "netstrata/model_io.h"
#include "netstrata/multiplex.h"
#include "netstrata/reference_model.h"
#include "netstrata/report.h"

#endif  // NETSTRATA_NETSTRATA_H_
