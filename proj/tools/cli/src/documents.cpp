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

#include "coxcompact/cli/documents.hpp"

#include <fstream>
#include <sstream>

#include "coxcompact/error.hpp"

namespace coxcompact::cli {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMalformedDocument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

coxeter::CoxeterSystem load_system_file(const std::string& path) {
  try {
    return coxeter::parse_system(read_text(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

pipeline::RepresentationDocument load_representation_file(const std::string& path) {
  try {
    return pipeline::parse_representation_document(read_text(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace coxcompact::cli
