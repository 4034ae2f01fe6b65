// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field circular H-MIMO beamforming for data and energy multicast
// Copyright (C) 2026 The hmimo authors
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

namespace hmimo
{

// Base class for all library errors. Callers that do not care about the
// specific failure can catch this one type.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Energy-user demand leaves no power for data users.
class EnergyInfeasible : public Error
{
  public:
    using Error::Error;
};

// An analog update found no admissible element (e.g. no positive real part).
class DegenerateAnalog : public Error
{
  public:
    using Error::Error;
};

// Effective beam QPb vanished; cannot normalize.
class DegenerateBeam : public Error
{
  public:
    using Error::Error;
};

// Least-squares system without usable column rank.
class SingularUpdate : public Error
{
  public:
    using Error::Error;
};

// Point outside the range where the Fresnel expansion is defined.
class OutOfValidity : public Error
{
  public:
    using Error::Error;
};

// Malformed or out-of-range configuration; message starts with the key path.
class ConfigError : public Error
{
  public:
    ConfigError(const std::string &path, const std::string &what)
        : Error(path + ": " + what), path_(path) {}

    const std::string &path() const noexcept { return path_; }

  private:
    std::string path_;
};

} // namespace hmimo
