#pragma once

// Family records and their JSON form. Rationals are "num/den" strings.

#include "fano95/search.hpp"

#include <json.hpp>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano95 {

using Json = nlohmann::ordered_json;

struct FamilyRecord {
  int n = 0;
  WeightSystem weights;
  Rational kcube;
  Basket basket;
  std::vector<BlowupChain> chains;
  std::vector<std::array<int, 3>> targets;
  bool has_fibration = false;

  int degree() const { return weights.degree(); }

  friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

inline FamilyRecord make_record(const FanoFamily& f) {
  FamilyRecord r{f.n, f.weights, f.kcube, f.basket, find_chains(f), fibration_targets(f), false};
  r.has_fibration = is_curve_center_exception(f.n) || !r.chains.empty();
  return r;
}

inline std::vector<FamilyRecord> build_database(const std::vector<FanoFamily>& families = standard_families()) {
  std::vector<FamilyRecord> db;
  db.reserve(families.size());
  for (const auto& f : families) db.push_back(make_record(f));
  return db;
}

inline Json event_to_json(const BlowupEvent& e) {
  Json children = Json::array();
  for (const auto& c : e.children) children.push_back(event_to_json(c));
  return Json{{"r", e.point.r}, {"a", e.point.a}, {"children", std::move(children)}};
}

inline BlowupEvent event_from_json(const Json& j) {
  BlowupEvent e{normalize_quotient(j.at("r").get<int>(), {1, j.at("a").get<int>(), -j.at("a").get<int>()}), {}};
  if (e.point.a != j.at("a").get<int>())
    throw std::invalid_argument("event type not in canonical form: " + j.dump());
  for (const auto& c : j.at("children")) e.children.push_back(event_from_json(c));
  return e;
}

inline Json record_to_json(const FamilyRecord& r) {
  Json weights = Json::array();
  for (int w : r.weights.ambient()) weights.push_back(w);
  Json basket = Json::array();
  for (const auto& e : r.basket.entries())
    basket.push_back(Json{{"r", e.type.r}, {"a", e.type.a}, {"count", e.count}});
  Json chains = Json::array();
  for (const auto& c : r.chains) {
    Json forest = Json::array();
    for (const auto& e : c.roots) forest.push_back(event_to_json(e));
    chains.push_back(std::move(forest));
  }
  Json targets = Json::array();
  for (const auto& t : r.targets) targets.push_back(Json{t[0], t[1], t[2]});
  return Json{{"n", r.n},
              {"weights", std::move(weights)},
              {"degree", r.degree()},
              {"kcube", r.kcube.str()},
              {"basket", std::move(basket)},
              {"chains", std::move(chains)},
              {"targets", std::move(targets)},
              {"has_fibration", r.has_fibration}};
}

/// Inverse of record_to_json. Chain degrees and multiplicities are
/// recomputed from the basket; inconsistent records are rejected.
inline FamilyRecord record_from_json(const Json& j) {
  const auto w = j.at("weights").get<std::vector<int>>();
  if (w.size() != 5 || w[0] != 1) throw std::invalid_argument("weights must be [1,a1,a2,a3,a4]");
  FamilyRecord r{j.at("n").get<int>(), WeightSystem({w[1], w[2], w[3], w[4]}),
                 Rational::parse(j.at("kcube").get<std::string>()), Basket{}, {}, {}, false};
  if (j.at("degree").get<int>() != r.degree())
    throw std::invalid_argument("degree does not match weights in record " + std::to_string(r.n));
  for (const auto& e : j.at("basket")) {
    const int rr = e.at("r").get<int>();
    const int a = e.at("a").get<int>();
    const auto t = normalize_quotient(rr, {1, a, -a});
    if (t.a != a) throw std::invalid_argument("basket type not in canonical form: " + e.dump());
    r.basket.add(t, e.at("count").get<int>());
  }
  for (const auto& forest : j.at("chains")) {
    std::vector<BlowupEvent> roots;
    for (const auto& e : forest) roots.push_back(event_from_json(e));
    r.chains.push_back(make_chain(std::move(roots), r.basket, r.kcube));
  }
  for (const auto& t : j.at("targets")) r.targets.push_back(t.get<std::array<int, 3>>());
  r.has_fibration = j.at("has_fibration").get<bool>();
  return r;
}

inline Json database_to_json(const std::vector<FamilyRecord>& db) {
  Json families = Json::array();
  for (const auto& r : db) families.push_back(record_to_json(r));
  return families;
}

inline std::vector<FamilyRecord> database_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("family database must be a JSON array");
  std::vector<FamilyRecord> db;
  for (const auto& r : j) db.push_back(record_from_json(r));
  return db;
}

/// Byte-stable text form: two-space indent, trailing newline.
inline std::string database_dump(const std::vector<FamilyRecord>& db) {
  return database_to_json(db).dump(2) + "\n";
}

}  // namespace fano95
