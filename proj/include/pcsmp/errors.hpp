// Copyright 2026 The pcsmp Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcs {

// Root of every error raised by the library. The CLI maps subclasses to exit
// codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operand lengths or widths disagree.
class ShapeError : public Error {
public:
    using Error::Error;
};

class InvalidParameterError : public Error {
public:
    using Error::Error;
};

// A gate kind the requested operation has no rule for.
class UnsupportedGateError : public Error {
public:
    using Error::Error;
};

// Dense oracles refuse circuits above their qubit limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

class NonUnitaryError : public Error {
public:
    using Error::Error;
};

// A documented precondition of an operation was violated by the caller.
class ContractError : public Error {
public:
    using Error::Error;
};

class ConstructionError : public Error {
public:
    using Error::Error;
};

class CalibrationError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// A metric has no value for the given input (e.g. an all-zero distribution).
class UndefinedMetricError : public Error {
public:
    using Error::Error;
};

// Failure inside one multi-programmed thread; carries the thread index.
class SimulationError : public Error {
public:
    SimulationError(std::size_t thread_id, const std::string& what)
        : Error("thread " + std::to_string(thread_id) + ": " + what), thread_id_(thread_id) {}

    std::size_t thread_id() const { return thread_id_; }

private:
    std::size_t thread_id_;
};

}  // namespace pcs
