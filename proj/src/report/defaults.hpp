// Copyright (C) 2026 The apkscan authors
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

namespace apkscan::defaults {

// Contents of the data/ files, embedded at build time so a bare binary works
// without an install step.  Files passed on the command line override these.
extern const char* kRules;
extern const char* kSourcesSinks;
extern const char* kSeedKeywords;
extern const char* kTrackers;
extern const char* kEntryPoints;

}  // namespace apkscan::defaults
