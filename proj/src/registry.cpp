// Copyright 2026 The dynreach Authors.
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

#include "dynreach/registry.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <type_traits>

#include "dynreach/dynamized_static.hpp"
#include "dynreach/es_family.hpp"
#include "dynreach/simple_incremental.hpp"
#include "text_util.hpp"

namespace dynreach {

namespace {

constexpr const char* kValidForms =
    "valid algorithms: sbfs, sdfs, cbfs, cdfs, lbfs, ldfs, "
    "si:<R|nR>:<SF|nSF>:<ratio in [0,1]>, "
    "es:<beta|inf>:<ratio|inf>, mes:<beta|inf>:<ratio|inf>, "
    "ses:<beta|inf>:<ratio|inf>";

[[noreturn]] void bad_spec(std::string_view spec) {
  throw UsageError("unknown algorithm '" + std::string(spec) + "'; " +
                   kValidForms);
}

std::vector<std::string_view> split_colon(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ':') {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::optional<double> parse_ratio(std::string_view s, bool allow_inf) {
  if (s == "inf") {
    if (!allow_inf) return std::nullopt;
    return std::numeric_limits<double>::infinity();
  }
  auto r = detail::parse_double(s);
  if (!r || *r < 0 || std::isnan(*r)) return std::nullopt;
  return r;
}

struct Resolved {
  AlgorithmFactory factory;
  std::string name;
};

Resolved resolve(std::string_view spec) {
  using G = const DiGraph&;
  auto stat = [](auto tag, SearchOrder order) -> AlgorithmFactory {
    using T = typename decltype(tag)::type;
    return [order](G g, VertexId s) { return std::make_unique<T>(g, s, order); };
  };
  if (spec == "sbfs")
    return {stat(std::type_identity<StaticSearch>{}, SearchOrder::kBfs), "sbfs"};
  if (spec == "sdfs")
    return {stat(std::type_identity<StaticSearch>{}, SearchOrder::kDfs), "sdfs"};
  if (spec == "cbfs")
    return {stat(std::type_identity<CachingSearch>{}, SearchOrder::kBfs), "cbfs"};
  if (spec == "cdfs")
    return {stat(std::type_identity<CachingSearch>{}, SearchOrder::kDfs), "cdfs"};
  if (spec == "lbfs")
    return {stat(std::type_identity<LazySearch>{}, SearchOrder::kBfs), "lbfs"};
  if (spec == "ldfs")
    return {stat(std::type_identity<LazySearch>{}, SearchOrder::kDfs), "ldfs"};

  const auto parts = split_colon(spec);
  if (parts.size() == 4 && parts[0] == "si") {
    SimpleIncrementalParams p;
    if (parts[1] == "R") {
      p.reverse_order = true;
    } else if (parts[1] != "nR") {
      bad_spec(spec);
    }
    if (parts[2] == "SF") {
      p.forward_search = true;
    } else if (parts[2] == "nSF") {
      p.forward_search = false;
    } else {
      bad_spec(spec);
    }
    const auto ratio = parse_ratio(parts[3], false);
    if (!ratio || *ratio > 1.0) bad_spec(spec);
    p.ratio = *ratio;
    AlgorithmFactory f = [p](G g, VertexId s) {
      return std::make_unique<SimpleIncremental>(g, s, p);
    };
    DiGraph empty(1);
    return {f, f(empty, 0)->name()};
  }

  if (parts.size() == 3 &&
      (parts[0] == "es" || parts[0] == "mes" || parts[0] == "ses")) {
    EsParams p;
    if (parts[1] == "inf") {
      p.beta = kUnlimitedBeta;
    } else {
      const auto beta = detail::parse_int<std::uint32_t>(parts[1]);
      if (!beta || *beta == 0 || *beta == kUnlimitedBeta) bad_spec(spec);
      p.beta = *beta;
    }
    const auto ratio = parse_ratio(parts[2], true);
    if (!ratio) bad_spec(spec);
    p.ratio = *ratio;
    AlgorithmFactory f;
    if (parts[0] == "ses") {
      f = [p](G g, VertexId s) {
        return std::make_unique<SimplifiedEvenShiloach>(g, s, p);
      };
    } else {
      const EsVariant variant =
          parts[0] == "es" ? EsVariant::kClassic : EsVariant::kMultiLevel;
      f = [p, variant](G g, VertexId s) {
        return std::make_unique<EvenShiloach>(g, s, variant, p);
      };
    }
    DiGraph empty(1);
    return {f, f(empty, 0)->name()};
  }
  bad_spec(spec);
}

}  // namespace

AlgorithmFactory make_algorithm_factory(std::string_view spec) {
  return resolve(spec).factory;
}

std::string canonical_algorithm_name(std::string_view spec) {
  return resolve(spec).name;
}

std::vector<std::string> canonical_configurations() {
  return {"sbfs",          "sdfs",          "cbfs",         "cdfs",
          "lbfs",          "ldfs",          "si:nR:SF:0.25", "si:nR:SF:0.5",
          "si:nR:SF:1",    "si:nR:nSF:0.25", "es:5:0.5",     "mes:5:0.5",
          "ses:5:0.5"};
}

std::vector<std::string> benchmark_configurations() {
  auto all = canonical_configurations();
  for (const char* fam : {"es", "mes", "ses"}) {
    all.push_back(std::string(fam) + ":100:1");
    all.push_back(std::string(fam) + ":inf:inf");
  }
  return all;
}

}  // namespace dynreach
