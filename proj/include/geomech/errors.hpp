// Copyright 2026 The geomech Authors
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

#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace geomech {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point given as coordinate/parameter name -> value, printed in errors and
/// reports as a witness.
using PointValues = std::map<std::string, double>;

std::string format_point(const PointValues& point);

/// Error that carries the sample point where something was observed.
class WitnessError : public Error {
 public:
  WitnessError(const std::string& what, PointValues point)
      : Error(what + (point.empty() ? "" : " at " + format_point(point))),
        point_(std::move(point)) {}
  const PointValues& point() const { return point_; }

 private:
  PointValues point_;
};

#define GEOMECH_DEFINE_ERROR(Name, Base)  \
  class Name : public Base {              \
   public:                                \
    using Base::Base;                     \
  };

// symexpr
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("syntax error at " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(std::string name)
      : Error("unknown symbol '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class UnboundSymbol : public Error {
 public:
  explicit UnboundSymbol(std::string name)
      : Error("unbound symbol '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

GEOMECH_DEFINE_ERROR(DomainError, Error)

// geomcalc
GEOMECH_DEFINE_ERROR(DegreeOverflow, Error)
GEOMECH_DEFINE_ERROR(ZeroDegree, Error)
GEOMECH_DEFINE_ERROR(ChartMismatch, Error)
GEOMECH_DEFINE_ERROR(DimensionMismatch, Error)
GEOMECH_DEFINE_ERROR(SingularJacobian, WitnessError)
GEOMECH_DEFINE_ERROR(NotInverse, WitnessError)

// tangentstruct
GEOMECH_DEFINE_ERROR(OddDimension, Error)

// lagrangian / hamiltonian
GEOMECH_DEFINE_ERROR(DegenerateLagrangian, WitnessError)
GEOMECH_DEFINE_ERROR(DegenerateOmega, WitnessError)
GEOMECH_DEFINE_ERROR(BadStructureConstants, Error)
GEOMECH_DEFINE_ERROR(NotPoisson, WitnessError)

// tulczyjew
GEOMECH_DEFINE_ERROR(RankDeficientEmbedding, WitnessError)

// weylnum
GEOMECH_DEFINE_ERROR(TruncationOverflow, Error)
GEOMECH_DEFINE_ERROR(InversionFailure, WitnessError)

// cli
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int col)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + what),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

GEOMECH_DEFINE_ERROR(UnresolvedReference, Error)
GEOMECH_DEFINE_ERROR(UnknownCheck, Error)

#undef GEOMECH_DEFINE_ERROR

}  // namespace geomech
