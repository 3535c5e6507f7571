/*
Copyright 2026 The metricdim Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace metricdim {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph construction
class vertex_out_of_range : public error {
 public:
  using error::error;
};
class self_loop : public error {
 public:
  using error::error;
};
class duplicate_edge : public error {
 public:
  using error::error;
};

// Parsing
class parse_error : public error {
 public:
  using error::error;
};
class graph6_error : public parse_error {
 public:
  enum class kind { bad_header, truncated, bad_byte, trailing_data };
  graph6_error(kind k, const std::string& what) : parse_error(what), kind_(k) {}
  kind which() const noexcept { return kind_; }

 private:
  kind kind_;
};

/// An operation requiring a connected graph was given a disconnected one.
class disconnected_graph : public error {
 public:
  using error::error;
};

/// Input exceeds a configured size limit (vertex count, parameter range).
class limit_exceeded : public error {
 public:
  using error::error;
};

/// Parameter outside an operation's documented domain.
class domain_error : public error {
 public:
  using error::error;
};

/// Search budget exhausted before the result could be certified.
class budget_exhausted : public error {
 public:
  using error::error;
};

/// Internal inconsistency, e.g. an empty distinguisher family.
class inconsistent_instance : public error {
 public:
  using error::error;
};

}  // namespace metricdim
