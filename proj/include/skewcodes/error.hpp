/*
 * Copyright 2026 The skewcodes Authors
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
 */

#pragma once

#include <stdexcept>
#include <string>

namespace skewcodes {

enum class ErrorKind {
    invalid_argument,  // malformed input or violated call contract
    budget_exceeded,   // enumeration would exceed the configured budget
    precondition,      // mathematical precondition failed (e.g. f not invariant)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(const std::string& what) { throw Error(ErrorKind::invalid_argument, what); }

[[noreturn]] inline void fail_precondition(const std::string& what) { throw Error(ErrorKind::precondition, what); }

[[noreturn]] inline void fail_budget(const std::string& what) { throw Error(ErrorKind::budget_exceeded, what); }

}  // namespace skewcodes
