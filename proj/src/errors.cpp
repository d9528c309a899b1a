// Copyright 2026 The qlocal developers
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

#include "qlocal/errors.hpp"

namespace qlocal {

std::string to_string(ParseCode code) {
  switch (code) {
    case ParseCode::MissingHeader: return "MissingHeader";
    case ParseCode::UnknownGate: return "UnknownGate";
    case ParseCode::TargetOutOfRange: return "TargetOutOfRange";
    case ParseCode::DuplicateTarget: return "DuplicateTarget";
    case ParseCode::MalformedNumber: return "MalformedNumber";
    case ParseCode::WrongParamCount: return "WrongParamCount";
    case ParseCode::WrongArity: return "WrongArity";
    case ParseCode::MalformedLine: return "MalformedLine";
    case ParseCode::BadCustomGate: return "BadCustomGate";
  }
  return "UnknownCode";
}

}  // namespace qlocal
