/******************************************************************************
 * Copyright 2026 The qolct Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

#ifndef QOLCT_ERRORS_HPP
#define QOLCT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qolct {

/// Parameter matrix rejected (det != 1, B = 0, degenerate composition, ...).
class invalid_params : public std::invalid_argument {
  public:
    explicit invalid_params(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Operands live on incompatible grids, or a grid is malformed.
class grid_mismatch : public std::invalid_argument {
  public:
    explicit grid_mismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Signal/mask file cannot be parsed.
class file_format_error : public std::runtime_error {
  public:
    explicit file_format_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qolct

#endif  // QOLCT_ERRORS_HPP
