// Copyright 2026 The Chevalley Authors
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

#include "chevalley/bracket_table.hpp"
#include "chevalley/cartan.hpp"
#include "chevalley/closed_form.hpp"
#include "chevalley/errors.hpp"
#include "chevalley/folding.hpp"
#include "chevalley/io.hpp"
#include "chevalley/report.hpp"
#include "chevalley/root_system.hpp"
#include "chevalley/verify.hpp"
