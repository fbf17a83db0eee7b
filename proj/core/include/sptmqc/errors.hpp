// Copyright 2026 The sptmqc Authors
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

#ifndef SPTMQC_ERRORS_HPP
#define SPTMQC_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace sptmqc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
    using Error::Error;
};
class EmptyError : public Error {
    using Error::Error;
};
class LabelError : public Error {
    using Error::Error;
};
class ResourceError : public Error {
    using Error::Error;
};
class DomainError : public Error {
    using Error::Error;
};

/// The transfer channel has no unique dominant eigenvalue. Carries the
/// channel spectrum (sorted by modulus) so callers can report it.
class DegeneracyError : public Error {
  public:
    DegeneracyError(const std::string &what, std::vector<std::complex<double>> spectrum)
        : Error(what), spectrum_(std::move(spectrum)) {}
    const std::vector<std::complex<double>> &spectrum() const { return spectrum_; }

  private:
    std::vector<std::complex<double>> spectrum_;
};

class NotASymmetryError : public Error {
    using Error::Error;
};
class AmbiguityError : public Error {
    using Error::Error;
};
class ReducibleVirtualSpaceError : public Error {
    using Error::Error;
};
class FactorizationError : public Error {
    using Error::Error;
};
class SymmetryError : public Error {
    using Error::Error;
};
class StalledFlowError : public Error {
    using Error::Error;
};
class NullOutcomeError : public Error {
    using Error::Error;
};

}  // namespace sptmqc

#endif
