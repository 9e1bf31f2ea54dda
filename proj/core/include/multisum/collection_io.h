// Copyright 2026 The multisum Authors
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

#ifndef MULTISUM_COLLECTION_IO_H_
#define MULTISUM_COLLECTION_IO_H_

#include <filesystem>
#include <string>
#include <vector>

#include "multisum/types.h"

namespace multisum {

// Manifest layout (JSON):
//
//   {
//     "normalize": false,
//     "videos": [
//       {"id": "v0", "features_path": "v0.csv",
//        "lengths_path": "v0.lengths", "interestingness_path": "v0.q"}
//     ]
//   }
//
// Paths are resolved relative to the manifest's directory. Feature files hold
// one comma-separated row of d values per segment in temporal order; length
// and interestingness files hold one value per line.
VideoCollection LoadCollection(const std::filesystem::path& manifest_path);

// Writes `collection` as a manifest plus per-video files into `directory`
// and returns the manifest path. Values are printed with 17 significant
// digits so a reload reproduces every matrix exactly.
std::filesystem::path WriteCollection(const VideoCollection& collection,
                                      const std::filesystem::path& directory,
                                      const std::string& manifest_name =
                                          "collection.json");

// Parsers for the individual file formats. Exposed for tests and tools.
Matrix ReadFeatureCsv(const std::filesystem::path& path);
std::vector<int> ReadLengths(const std::filesystem::path& path);
Vector ReadInterestingness(const std::filesystem::path& path);

// Scales every column to unit l2 norm. Zero columns are left untouched.
Matrix NormalizeColumns(const Matrix& features);

}  // namespace multisum

#endif  // MULTISUM_COLLECTION_IO_H_
