// Copyright 2026 The sepbasis Authors
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

#ifndef SEPBASIS_ERROR_HPP
#define SEPBASIS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepbasis {

enum class ErrorKind {
  Parse,          // malformed textual input
  Domain,         // a precondition on caller-supplied values was violated
  NotInSpan,      // polynomial outside the span of a basis family
  Singular,       // exact elimination ran out of nonzero pivots
  Overflow,       // a degree left the working frame (strict, no truncation)
  FrameMismatch,  // maps combined over different frames
  Moments,        // moment functional too short for the requested degree
  Consistency,    // two internal routes disagreed
};

class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(ErrorKind kind, const std::string& msg, std::size_t offset = npos)
      : std::runtime_error(msg), kind_(kind), offset_(offset) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Byte offset into the input for parse errors, npos otherwise.
  std::size_t offset() const noexcept { return offset_; }

 private:
  ErrorKind kind_;
  std::size_t offset_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg,
                              std::size_t offset = Error::npos) {
  throw Error(kind, msg, offset);
}

}  // namespace sepbasis

#endif
