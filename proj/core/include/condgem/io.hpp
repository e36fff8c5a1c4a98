// Copyright 2026 The condgem Authors
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

#ifndef CONDGEM_IO_HPP_
#define CONDGEM_IO_HPP_

#include <string>

namespace condgem::io {

// Shortest decimal string that round-trips to the same double
// (std::to_chars); the basis of the byte-reproducible output contract.
std::string format_double(double v);

// JSON value for a double: format_double, except NaN/inf become null.
std::string json_number(double v);

// Body escaping for a JSON string (quotes not included).
std::string json_escape(const std::string& s);

// CSV field: quoted, with inner quotes doubled, when the content needs it.
std::string csv_field(const std::string& s);

}  // namespace condgem::io

#endif  // CONDGEM_IO_HPP_
