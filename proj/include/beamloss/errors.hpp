// SPDX-License-Identifier: Apache-2.0
//
// beamloss - orientation-dependent path loss over a multi-elliptical scattering geometry
// Copyright (C) 2026 beamloss contributors
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

#ifndef BEAMLOSS_ERRORS_HPP
#define BEAMLOSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace beamloss {

// Base class of all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A Tx-Rx distance that is zero, negative or non-finite.
class InvalidDistance : public Error {
  public:
    using Error::Error;
};

class NoDelayedTaps : public Error {
  public:
    using Error::Error;
};

class DegenerateEllipse : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

class MissingScale : public Error {
  public:
    using Error::Error;
};

class EmptyProfile : public Error {
  public:
    using Error::Error;
};

class UnknownAntenna : public Error {
  public:
    using Error::Error;
};

class OutOfRange : public Error {
  public:
    using Error::Error;
};

class MixedAntennaTypes : public Error {
  public:
    using Error::Error;
};

} // namespace beamloss

#endif
