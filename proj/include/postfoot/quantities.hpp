// Copyright 2026 The postfoot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <compare>
#include <string>
#include <string_view>

#include "postfoot/errors.hpp"

namespace postfoot {

// Dimension-tagged magnitudes used by the footprint model. A unit-bearing
// quantity keeps the magnitude in the unit it was built with; conversion to the
// canonical units (TiB, kWh, kg) happens on read.

namespace detail {

inline double require_non_negative(double v, std::string_view what) {
  if (!std::isfinite(v) || v < 0.0) {
    throw InputError(std::string(what) + " must be a finite non-negative value, got " +
                     std::to_string(v));
  }
  return v;
}

}  // namespace detail

enum class DataUnit { GiB, TiB, EiB };
enum class EnergyUnit { Wh, kWh, MWh, TWh };
enum class MassUnit { kg, t, Mt };

struct DataDim {
  using Unit = DataUnit;
  static constexpr std::string_view name = "data size";
  // Binary prefixes: 1 EiB = 2^20 TiB, 1 TiB = 2^10 GiB.
  static constexpr double factor(Unit u) {
    switch (u) {
      case DataUnit::GiB: return 1.0 / 1024.0;
      case DataUnit::TiB: return 1.0;
      case DataUnit::EiB: return 1048576.0;
    }
    return 1.0;
  }
  static constexpr std::string_view symbol(Unit u) {
    switch (u) {
      case DataUnit::GiB: return "GiB";
      case DataUnit::TiB: return "TiB";
      case DataUnit::EiB: return "EiB";
    }
    return "?";
  }
};

struct EnergyDim {
  using Unit = EnergyUnit;
  static constexpr std::string_view name = "energy";
  static constexpr double factor(Unit u) {
    switch (u) {
      case EnergyUnit::Wh: return 1e-3;
      case EnergyUnit::kWh: return 1.0;
      case EnergyUnit::MWh: return 1e3;
      case EnergyUnit::TWh: return 1e9;
    }
    return 1.0;
  }
  static constexpr std::string_view symbol(Unit u) {
    switch (u) {
      case EnergyUnit::Wh: return "Wh";
      case EnergyUnit::kWh: return "kWh";
      case EnergyUnit::MWh: return "MWh";
      case EnergyUnit::TWh: return "TWh";
    }
    return "?";
  }
};

struct MassDim {
  using Unit = MassUnit;
  static constexpr std::string_view name = "carbon mass";
  static constexpr double factor(Unit u) {
    switch (u) {
      case MassUnit::kg: return 1.0;
      case MassUnit::t: return 1e3;
      case MassUnit::Mt: return 1e9;
    }
    return 1.0;
  }
  static constexpr std::string_view symbol(Unit u) {
    switch (u) {
      case MassUnit::kg: return "kg";
      case MassUnit::t: return "t";
      case MassUnit::Mt: return "Mt";
    }
    return "?";
  }
};

template <class Dim>
class Quantity {
 public:
  using Unit = typename Dim::Unit;

  Quantity() = default;
  Quantity(double value, Unit unit)
      : value_(detail::require_non_negative(value, Dim::name)), unit_(unit) {}

  static Quantity zero(Unit unit) { return Quantity(0.0, unit); }

  double value() const { return value_; }
  Unit unit() const { return unit_; }
  double in(Unit u) const {
    if (u == unit_) return value_;
    return value_ * Dim::factor(unit_) / Dim::factor(u);
  }
  Quantity to(Unit u) const { return Quantity(in(u), u); }

  Quantity operator+(const Quantity& o) const { return with_value(value_ + o.in(unit_)); }
  Quantity operator-(const Quantity& o) const { return with_value(value_ - o.in(unit_)); }
  Quantity& operator+=(const Quantity& o) { return *this = *this + o; }
  Quantity operator*(double k) const { return with_value(value_ * k); }
  Quantity operator/(double k) const { return with_value(value_ / k); }
  friend Quantity operator*(double k, const Quantity& q) { return q * k; }
  double operator/(const Quantity& o) const { return value_ / o.in(unit_); }

  friend bool operator==(const Quantity& a, const Quantity& b) { return a.canonical() == b.canonical(); }
  friend auto operator<=>(const Quantity& a, const Quantity& b) { return a.canonical() <=> b.canonical(); }

  std::string str() const { return std::to_string(value_) + " " + std::string(Dim::symbol(unit_)); }

 private:
  double canonical() const { return value_ * Dim::factor(unit_); }
  Quantity with_value(double v) const { return Quantity(v, unit_); }

  double value_ = 0.0;
  Unit unit_ = Unit{};
};

using DataSize = Quantity<DataDim>;
using Energy = Quantity<EnergyDim>;
using CarbonMass = Quantity<MassDim>;

inline DataSize gib(double v) { return {v, DataUnit::GiB}; }
inline DataSize tib(double v) { return {v, DataUnit::TiB}; }
inline DataSize eib(double v) { return {v, DataUnit::EiB}; }
inline Energy wh(double v) { return {v, EnergyUnit::Wh}; }
inline Energy kwh(double v) { return {v, EnergyUnit::kWh}; }
inline Energy twh(double v) { return {v, EnergyUnit::TWh}; }
inline CarbonMass kg(double v) { return {v, MassUnit::kg}; }
inline CarbonMass tonnes(double v) { return {v, MassUnit::t}; }
inline CarbonMass megatonnes(double v) { return {v, MassUnit::Mt}; }

inline DataSize convert_data_size(const DataSize& q, DataUnit target) { return q.to(target); }
inline Energy convert_energy(const Energy& q, EnergyUnit target) { return q.to(target); }
inline CarbonMass convert_mass(const CarbonMass& q, MassUnit target) { return q.to(target); }

class Power {
 public:
  Power() = default;
  explicit Power(double watts) : watts_(detail::require_non_negative(watts, "power")) {}
  double watts() const { return watts_; }
  friend auto operator<=>(const Power&, const Power&) = default;

 private:
  double watts_ = 0.0;
};

// kg CO2 per kWh.
class CarbonIntensity {
 public:
  CarbonIntensity() = default;
  explicit CarbonIntensity(double kg_per_kwh)
      : kg_per_kwh_(detail::require_non_negative(kg_per_kwh, "carbon intensity")) {}
  double kg_per_kwh() const { return kg_per_kwh_; }
  friend auto operator<=>(const CarbonIntensity&, const CarbonIntensity&) = default;

 private:
  double kg_per_kwh_ = 0.0;
};

class Fraction {
 public:
  Fraction() = default;
  explicit Fraction(double v) : value_(v) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw InputError("fraction must lie in [0, 1], got " + std::to_string(v));
    }
  }
  double value() const { return value_; }
  friend auto operator<=>(const Fraction&, const Fraction&) = default;

 private:
  double value_ = 0.0;
};

class Pue {
 public:
  Pue() = default;
  explicit Pue(double v) : value_(v) {
    if (!(std::isfinite(v) && v >= 1.0)) {
      throw InputError("PUE must be >= 1, got " + std::to_string(v));
    }
  }
  double value() const { return value_; }
  friend auto operator<=>(const Pue&, const Pue&) = default;

 private:
  double value_ = 1.0;
};

class DurationYears {
 public:
  static constexpr double kHoursPerYear = 8760.0;

  DurationYears() = default;
  explicit DurationYears(double years) : years_(years) {
    if (!(std::isfinite(years) && years > 0.0)) {
      throw InputError("duration must be positive, got " + std::to_string(years));
    }
  }
  static DurationYears from_hours(double h) { return DurationYears(h / kHoursPerYear); }

  double years() const { return years_; }
  double hours() const { return years_ * kHoursPerYear; }
  friend auto operator<=>(const DurationYears&, const DurationYears&) = default;

 private:
  double years_ = 1.0;
};

// 1 W sustained for 1 h is 1 Wh.
inline Energy operator*(const Power& p, const DurationYears& d) { return wh(p.watts() * d.hours()); }
inline Energy operator*(const DurationYears& d, const Power& p) { return p * d; }

inline CarbonMass operator*(const Energy& e, const CarbonIntensity& i) {
  return kg(e.in(EnergyUnit::kWh) * i.kg_per_kwh());
}
inline CarbonMass operator*(const CarbonIntensity& i, const Energy& e) { return e * i; }

}  // namespace postfoot
