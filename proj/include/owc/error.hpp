// SPDX-License-Identifier: Apache-2.0
//
// owc-laser: indoor laser-based optical wireless network simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace owc {

// Error categories. Each maps to a distinct CLI exit code (see exit_code()).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept { return 10; }
};

// Malformed configuration text. Message carries the line number.
class ParseError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

// A value violates a type invariant. Message names the offending field.
class ValidationError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

// Argument outside the domain of a mathematical operation.
class DomainError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 4; }
};

// More users than access points: zero forcing has no solution.
class InfeasibleError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 5; }
};

// Channel matrix is numerically rank deficient.
class SingularChannelError : public Error {
public:
    SingularChannelError(const std::string& what, std::size_t user_a, std::size_t user_b)
        : Error(what), user_a_(user_a), user_b_(user_b) {}
    int exit_code() const noexcept override { return 6; }
    std::size_t user_a() const noexcept { return user_a_; }
    std::size_t user_b() const noexcept { return user_b_; }

private:
    std::size_t user_a_;
    std::size_t user_b_;
};

class IoError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 7; }
};

} // namespace owc
