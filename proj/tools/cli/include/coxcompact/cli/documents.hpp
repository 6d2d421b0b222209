// Copyright 2026 The coxcompact Authors
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

#pragma once

#include <string>

#include "coxcompact/coxeter/system.hpp"
#include "coxcompact/pipeline/representation.hpp"

namespace coxcompact::cli {

/// Whole file as text. Throws kMalformedDocument when it cannot be read.
std::string read_text(const std::string& path);

coxeter::CoxeterSystem load_system_file(const std::string& path);

pipeline::RepresentationDocument load_representation_file(const std::string& path);

}  // namespace coxcompact::cli
