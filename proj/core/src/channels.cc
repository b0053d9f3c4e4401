// Copyright 2026 The qkdkr Authors
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

#include "qkdkr/channels.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace qkdkr {

std::string_view ToString(ChannelFamily family) {
  switch (family) {
    case ChannelFamily::kDepolarizing:
      return "depolarizing";
    case ChannelFamily::kAmplitudeDamping:
      return "amplitude_damping";
    case ChannelFamily::kCustom:
      return "custom";
  }
  return "unknown";
}

Matrix FourierBasis(int dim, FourierConvention convention) {
  if (dim < 1) throw std::invalid_argument("FourierBasis: dimension must be >= 1");
  const double factor = convention == FourierConvention::kStandard ? 2.0 : 1.0;
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  Matrix f(static_cast<std::size_t>(dim));
  for (int b = 0; b < dim; ++b) {
    for (int a = 0; a < dim; ++a) {
      // Reduce a*b mod 2D first so the phase argument stays small.
      const int k = (a * b) % (2 * dim);
      const double phase = -factor * std::numbers::pi * k / dim;
      f(b, a) = std::polar(norm, phase);
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// ChannelModel

namespace {

std::string Where(const char* field, int i, int j) {
  return std::string(field) + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

ProbabilityDistribution CheckedXDist(std::vector<double> x, int dim) {
  if (static_cast<int>(x.size()) != dim) {
    throw std::invalid_argument("ChannelModel: x_dist has " + std::to_string(x.size()) +
                                " entries, expected " + std::to_string(dim));
  }
  try {
    return ProbabilityDistribution(std::move(x));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("ChannelModel: x_dist: ") + e.what());
  }
}

}  // namespace

ChannelModel::ChannelModel(int dim, std::vector<std::vector<double>> z_cond,
                           std::vector<double> x_dist, std::string label,
                           ChannelFamily family)
    : dim_(dim),
      z_cond_(std::move(z_cond)),
      x_dist_(CheckedXDist(std::move(x_dist), dim)),
      q_x_(1.0 - x_dist_[0]),
      label_(std::move(label)),
      family_(family) {
  if (dim_ < 2) throw std::invalid_argument("ChannelModel: dim must be >= 2");
  if (static_cast<int>(z_cond_.size()) != dim_) {
    throw std::invalid_argument("ChannelModel: z_cond has " +
                                std::to_string(z_cond_.size()) + " rows, expected " +
                                std::to_string(dim_));
  }
  for (int b = 0; b < dim_; ++b) {
    if (static_cast<int>(z_cond_[b].size()) != dim_) {
      throw std::invalid_argument("ChannelModel: z_cond row " + std::to_string(b) +
                                  " has " + std::to_string(z_cond_[b].size()) +
                                  " entries, expected " + std::to_string(dim_));
    }
    for (int a = 0; a < dim_; ++a) {
      double& v = z_cond_[b][a];
      if (!std::isfinite(v) || v < -kTol || v > 1.0 + kTol) {
        throw std::invalid_argument("ChannelModel: " + Where("z_cond", b, a) + " = " +
                                    std::to_string(v) + " outside [0, 1]");
      }
      v = std::clamp(v, 0.0, 1.0);
    }
  }
  for (int a = 0; a < dim_; ++a) {
    double total = 0.0;
    for (int b = 0; b < dim_; ++b) total += z_cond_[b][a];
    if (std::abs(total - 1.0) > kTol) {
      throw std::invalid_argument("ChannelModel: z_cond column " + std::to_string(a) +
                                  " (input a=" + std::to_string(a) + ") sums to " +
                                  std::to_string(total) + ", expected 1");
    }
  }
}

std::vector<double> ChannelModel::Column(int a) const {
  std::vector<double> col(dim_);
  for (int b = 0; b < dim_; ++b) col[b] = z_cond_[b][a];
  return col;
}

double ChannelModel::SymmetryDeviation() const {
  const double q = 1.0 - z_cond_[0][0];
  const double off = q / (dim_ - 1);
  double dev = 0.0;
  for (int b = 0; b < dim_; ++b) {
    for (int a = 0; a < dim_; ++a) {
      const double expected = a == b ? 1.0 - q : off;
      dev = std::max(dev, std::abs(z_cond_[b][a] - expected));
    }
  }
  return dev;
}

double ChannelModel::MaxDifference(const ChannelModel& other) const {
  if (other.dim_ != dim_) return INFINITY;
  double d = 0.0;
  for (int b = 0; b < dim_; ++b) {
    for (int a = 0; a < dim_; ++a) {
      d = std::max(d, std::abs(z_cond_[b][a] - other.z_cond_[b][a]));
    }
    d = std::max(d, std::abs(x_dist_[b] - other.x_dist_[b]));
  }
  return d;
}

// ---------------------------------------------------------------------------
// KrausSet

KrausSet::KrausSet(std::vector<Matrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) throw std::invalid_argument("KrausSet: no operators");
  const std::size_t dim = operators_.front().dim();
  if (dim == 0) throw std::invalid_argument("KrausSet: zero-dimensional operator");
  for (std::size_t i = 0; i < operators_.size(); ++i) {
    if (operators_[i].dim() != dim) {
      throw std::invalid_argument("KrausSet: operator " + std::to_string(i) +
                                  " has dimension " +
                                  std::to_string(operators_[i].dim()) + ", expected " +
                                  std::to_string(dim));
    }
  }
  const double defect = CompletenessDefect();
  if (defect > kTol) {
    throw std::invalid_argument(
        "KrausSet: completeness violated, max |sum E^dagger E - I| = " +
        std::to_string(defect));
  }
}

double KrausSet::CompletenessDefect() const {
  const std::size_t dim = operators_.front().dim();
  Matrix sum(dim);
  for (const Matrix& e : operators_) sum += e.Adjoint() * e;
  sum -= Matrix::Identity(dim);
  return sum.MaxAbs();
}

HermitianMatrix ApplyChannel(const KrausSet& kraus, const HermitianMatrix& rho) {
  if (static_cast<int>(rho.dim()) != kraus.dim()) {
    throw std::invalid_argument("ApplyChannel: state has dimension " +
                                std::to_string(rho.dim()) + ", channel acts on " +
                                std::to_string(kraus.dim()));
  }
  Matrix out(rho.dim());
  for (const Matrix& e : kraus.operators()) out += e * rho.matrix() * e.Adjoint();
  return HermitianMatrix(out);
}

// ---------------------------------------------------------------------------
// Constructors

ChannelModel DepolarizingChannel(int dim, double q) {
  if (dim < 2) throw std::invalid_argument("DepolarizingChannel: dim must be >= 2");
  const double limit = 1.0 - 1.0 / dim;
  if (!(q >= 0.0 && q < limit)) {
    throw std::invalid_argument("DepolarizingChannel: q = " + std::to_string(q) +
                                " outside [0, 1 - 1/D)");
  }
  const double off = q / (dim - 1);
  std::vector<std::vector<double>> z(dim, std::vector<double>(dim, off));
  for (int a = 0; a < dim; ++a) z[a][a] = 1.0 - q;
  std::vector<double> x(dim, off);
  x[0] = 1.0 - q;
  std::ostringstream label;
  label << "depolarizing(D=" << dim << ",q=" << q << ")";
  return ChannelModel(dim, std::move(z), std::move(x), label.str(),
                      ChannelFamily::kDepolarizing);
}

KrausSet AmplitudeDampingKraus(int dim, double p) {
  if (dim < 2) throw std::invalid_argument("AmplitudeDampingKraus: dim must be >= 2");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("AmplitudeDampingKraus: p = " + std::to_string(p) +
                                " outside [0, 1]");
  }
  const auto n = static_cast<std::size_t>(dim);
  std::vector<Matrix> ops;
  Matrix e0(n);
  e0(0, 0) = 1.0;
  for (std::size_t k = 1; k < n; ++k) e0(k, k) = std::sqrt(1.0 - p);
  ops.push_back(std::move(e0));
  for (std::size_t k = 1; k < n; ++k) {
    Matrix ek(n);
    ek(0, k) = std::sqrt(p);
    ops.push_back(std::move(ek));
  }
  return KrausSet(std::move(ops));
}

ChannelModel AmplitudeDampingChannel(int dim, double p) {
  std::ostringstream label;
  label << "amplitude_damping(D=" << dim << ",p=" << p << ")";
  return ChannelFromKraus(AmplitudeDampingKraus(dim, p), label.str(),
                          ChannelFamily::kAmplitudeDamping);
}

KrausSet DepolarizingKraus(int dim, double q) {
  if (dim < 2) throw std::invalid_argument("DepolarizingKraus: dim must be >= 2");
  if (!(q >= 0.0 && q < 1.0 - 1.0 / dim)) {
    throw std::invalid_argument("DepolarizingKraus: q outside [0, 1 - 1/D)");
  }
  const auto n = static_cast<std::size_t>(dim);
  const double d2 = static_cast<double>(dim) * dim;
  const double mix = dim * q / (dim - 1);  // weight of the fully mixing twirl
  std::vector<Matrix> ops;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const double w = (j == 0 && k == 0) ? 1.0 - mix + mix / d2 : mix / d2;
      if (w == 0.0) continue;
      // X^j Z^k: |b> -> omega^{k b} |b + j>
      Matrix weyl(n);
      for (std::size_t b = 0; b < n; ++b) {
        const double phase = 2.0 * std::numbers::pi * static_cast<double>((k * b) % n) / dim;
        weyl((b + j) % n, b) = std::polar(std::sqrt(w), phase);
      }
      ops.push_back(std::move(weyl));
    }
  }
  return KrausSet(std::move(ops));
}

ChannelModel ChannelFromKraus(const KrausSet& kraus, std::string label,
                              ChannelFamily family, FourierConvention convention) {
  const int dim = kraus.dim();
  if (dim < 2) throw std::invalid_argument("ChannelFromKraus: dim must be >= 2");
  std::vector<std::vector<double>> z(dim, std::vector<double>(dim, 0.0));
  for (const Matrix& e : kraus.operators()) {
    for (int b = 0; b < dim; ++b) {
      for (int a = 0; a < dim; ++a) z[b][a] += std::norm(e(b, a));
    }
  }
  const Matrix f = FourierBasis(dim, convention);
  const std::vector<Complex> x0 = f.Column(0);
  const HermitianMatrix out = ApplyChannel(kraus, HermitianMatrix::Projector(x0));
  std::vector<double> x(dim);
  for (int i = 0; i < dim; ++i) {
    const std::vector<Complex> xi = f.Column(i);
    const std::vector<Complex> rx = out.matrix().Apply(xi);
    Complex acc = 0.0;
    for (int r = 0; r < dim; ++r) acc += std::conj(xi[r]) * rx[r];
    x[i] = acc.real();
  }
  return ChannelModel(dim, std::move(z), std::move(x), std::move(label), family);
}

// ---------------------------------------------------------------------------
// Channel files

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> LineColumn(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

double Number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ChannelFileError("channel file: " + field + " is not a number");
  return j.get<double>();
}

Complex ComplexEntry(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) {
    throw ChannelFileError("channel file: " + field + " must be [re, im]");
  }
  return {Number(j[0], field + "[0]"), Number(j[1], field + "[1]")};
}

ChannelModel FromJson(const json& doc) {
  if (!doc.is_object()) throw ChannelFileError("channel file: top level must be an object");
  if (!doc.contains("dim")) throw ChannelFileError("channel file: missing field \"dim\"");
  if (!doc["dim"].is_number_integer()) {
    throw ChannelFileError("channel file: \"dim\" must be an integer");
  }
  const int dim = doc["dim"].get<int>();
  if (dim < 2) throw ChannelFileError("channel file: \"dim\" must be >= 2");
  const std::string label =
      doc.contains("label") && doc["label"].is_string() ? doc["label"].get<std::string>()
                                                        : std::string("file");
  const bool has_z = doc.contains("z_cond");
  const bool has_k = doc.contains("kraus");
  if (has_z == has_k) {
    throw ChannelFileError(
        "channel file: provide exactly one of \"z_cond\" (+ \"x_dist\") or \"kraus\"");
  }

  try {
    if (has_z) {
      if (!doc.contains("x_dist")) {
        throw ChannelFileError("channel file: \"z_cond\" requires \"x_dist\"");
      }
      const json& zj = doc["z_cond"];
      if (!zj.is_array() || static_cast<int>(zj.size()) != dim) {
        throw ChannelFileError("channel file: \"z_cond\" must have " +
                               std::to_string(dim) + " rows");
      }
      std::vector<std::vector<double>> z(dim);
      for (int b = 0; b < dim; ++b) {
        const json& row = zj[b];
        const std::string where = "z_cond[" + std::to_string(b) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
          throw ChannelFileError("channel file: " + where + " must have " +
                                 std::to_string(dim) + " entries");
        }
        for (int a = 0; a < dim; ++a) {
          z[b].push_back(Number(row[a], where + "[" + std::to_string(a) + "]"));
        }
      }
      const json& xj = doc["x_dist"];
      if (!xj.is_array()) throw ChannelFileError("channel file: \"x_dist\" must be an array");
      std::vector<double> x;
      for (std::size_t i = 0; i < xj.size(); ++i) {
        x.push_back(Number(xj[i], "x_dist[" + std::to_string(i) + "]"));
      }
      return ChannelModel(dim, std::move(z), std::move(x), label);
    }

    const json& kj = doc["kraus"];
    if (!kj.is_array() || kj.empty()) {
      throw ChannelFileError("channel file: \"kraus\" must be a non-empty array");
    }
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < kj.size(); ++i) {
      const std::string where = "kraus[" + std::to_string(i) + "]";
      const json& mj = kj[i];
      if (!mj.is_array() || static_cast<int>(mj.size()) != dim) {
        throw ChannelFileError("channel file: " + where + " must have " +
                               std::to_string(dim) + " rows");
      }
      Matrix m(static_cast<std::size_t>(dim));
      for (int r = 0; r < dim; ++r) {
        const std::string rw = where + "[" + std::to_string(r) + "]";
        if (!mj[r].is_array() || static_cast<int>(mj[r].size()) != dim) {
          throw ChannelFileError("channel file: " + rw + " must have " +
                                 std::to_string(dim) + " entries");
        }
        for (int c = 0; c < dim; ++c) {
          m(r, c) = ComplexEntry(mj[r][c], rw + "[" + std::to_string(c) + "]");
        }
      }
      ops.push_back(std::move(m));
    }
    return ChannelFromKraus(KrausSet(std::move(ops)), label);
  } catch (const std::invalid_argument& e) {
    throw ChannelFileError(std::string("channel file: ") + e.what());
  }
}

}  // namespace

ChannelModel ParseChannelDocument(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = LineColumn(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ChannelFileError("channel file: parse error at line " + std::to_string(line) +
                           ", column " + std::to_string(col) + ": " + e.what());
  }
  return FromJson(doc);
}

ChannelModel LoadChannelFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ChannelFileError("channel file: cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseChannelDocument(buffer.str());
  } catch (const ChannelFileError& e) {
    throw ChannelFileError(path.string() + ": " + e.what());
  }
}

std::string ChannelToDocument(const ChannelModel& channel) {
  json doc;
  doc["dim"] = channel.dim();
  doc["label"] = channel.label();
  doc["z_cond"] = channel.z_cond();
  doc["x_dist"] = channel.x_dist().probs();
  return doc.dump(2);
}

std::string KrausToDocument(const KrausSet& kraus, std::string_view label) {
  json doc;
  doc["dim"] = kraus.dim();
  doc["label"] = std::string(label);
  json ops = json::array();
  for (const Matrix& m : kraus.operators()) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.dim(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
      rows.push_back(row);
    }
    ops.push_back(rows);
  }
  doc["kraus"] = ops;
  return doc.dump(2);
}

}  // namespace qkdkr
