//
// Copyright 2026 The Mintlab Authors
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
//

#ifndef MINT_ERRORS_HPP_
#define MINT_ERRORS_HPP_

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace mint {

// Error taxonomy mapped onto the CLI exit-code contract:
//   ConfigError  -> exit 2  (bad shapes, parameters, labels, usage)
//   DataError    -> exit 3  (io, format, provenance, capacity, coverage)
//   RuntimeFailure -> exit 4
enum class ErrorCategory { kConfig, kData, kRuntime };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(ErrorCategory::kConfig, what) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& what)
      : Error(ErrorCategory::kData, what) {}
};

class RuntimeFailure : public Error {
 public:
  explicit RuntimeFailure(const std::string& what)
      : Error(ErrorCategory::kRuntime, what) {}
};

namespace detail {

inline void cat_into(std::ostringstream&) {}

template <typename Head, typename... Tail>
void cat_into(std::ostringstream& os, Head&& head, Tail&&... tail) {
  os << std::forward<Head>(head);
  cat_into(os, std::forward<Tail>(tail)...);
}

}  // namespace detail

template <typename... Parts>
std::string cat(Parts&&... parts) {
  std::ostringstream os;
  detail::cat_into(os, std::forward<Parts>(parts)...);
  return os.str();
}

template <typename... Parts>
void check_config(bool ok, Parts&&... parts) {
  if (!ok) throw ConfigError(cat(std::forward<Parts>(parts)...));
}

template <typename... Parts>
void check_data(bool ok, Parts&&... parts) {
  if (!ok) throw DataError(cat(std::forward<Parts>(parts)...));
}

}  // namespace mint

#endif  // MINT_ERRORS_HPP_
