// src/json_io.cpp
#include "powerlab/json_io.hpp"

namespace powerlab {

std::string ratio_text(const Ratio& r) { return r.str(); }

std::string ratio_decimal(const Ratio& r) {
  return QuadraticReal::rational(r.num(), r.den()).to_decimal(15);
}

Json to_json(const IndexReport& report) {
  Json j;
  j["prefix_length"] = report.prefix_length;
  j["index_num"] = report.index_estimate.num();
  j["index_den"] = report.index_estimate.den();
  j["witness"] = {{"start", report.witness.start},
                  {"period", report.witness.period},
                  {"length", report.witness.length}};
  j["max_integer_power"] = {{"j", report.max_integer_power.exponent},
                            {"witness", report.max_integer_power.witness.str()}};
  if (report.per_factor) {
    Json pf = Json::object();
    for (const auto& [factor, idx] : *report.per_factor) pf[factor] = idx.str();
    j["per_factor"] = std::move(pf);
  }
  return j;
}

Json to_json(const IndexFormulaReport& report) {
  Json j;
  j["n_max"] = report.n_max;
  Json terms = Json::array();
  for (const auto& t : report.terms) terms.push_back(t.to_string());
  j["terms"] = std::move(terms);
  j["truncated_sup"] = report.truncated_sup.to_string();
  j["truncated_sup_decimal"] = report.truncated_sup.to_decimal(15);
  j["argmax"] = report.argmax;
  if (report.periodic_limit) {
    j["periodic_limit"] = report.periodic_limit->to_string();
    j["periodic_limit_decimal"] = report.periodic_limit->to_decimal(15);
  } else {
    j["periodic_limit"] = nullptr;
    j["periodic_limit_decimal"] = nullptr;
  }
  j["supremum"] = report.supremum ? Json(report.supremum->to_string()) : Json(nullptr);
  j["finite"] = report.finite;
  j["window_only"] = report.window_only;
  j["K"] = report.max_partial_quotient;
  return j;
}

Json to_json(const BlockParse& parse) {
  Json j;
  j["level"] = parse.level;
  j["E"] = parse.e.str();
  j["F"] = parse.f.str();
  j["k"] = parse.k;
  Json tags = Json::array();
  for (BlockTag t : parse.blocks) tags.push_back(to_string(t));
  j["tags"] = std::move(tags);
  j["consumed"] = parse.consumed;
  j["tail"] = parse.tail;
  return j;
}

namespace {

Json certificate_json(const SturmianCertificate& c) {
  Json j;
  j["applicable"] = c.applicable;
  j["complexity_ok"] = c.complexity_ok;
  j["complexity_failure_at"] =
      c.complexity_failure_at ? Json(*c.complexity_failure_at) : Json(nullptr);
  j["balanced"] = c.balanced;
  j["passed"] = c.passed();
  return j;
}

}  // namespace

Json to_json(const AbmpReport& report) {
  Json j;
  j["prefix_length"] = report.prefix_length;
  j["image_length"] = report.image_length;
  j["n_max"] = report.n_max;
  j["ternarization_roundtrip"] = report.ternarization_roundtrip;
  j["sigma01_is_sturmian"] = certificate_json(report.sigma01_certificate);
  j["sigma10_is_sturmian"] = certificate_json(report.sigma10_certificate);
  j["sigma01_equals_rotation"] = report.sigma01_equals_rotation;
  j["details"] = report.details;
  j["passed"] = report.all_passed();
  return j;
}

Json to_json(const BoundReport& report) {
  Json j;
  j["K"] = report.k;
  j["lower"] = report.lower;
  j["upper"] = report.upper;
  j["prefix_length"] = report.prefix_length;
  j["index_estimate"] = ratio_text(report.index_estimate);
  j["index_estimate_decimal"] = ratio_decimal(report.index_estimate);
  j["max_integer_power"] = report.max_integer_power;
  j["verdict_upper"] = report.verdict_upper;
  j["verdict_integer"] = report.verdict_integer;
  j["lower_witness"] = report.lower_witness;
  j["passed"] = report.passed();
  return j;
}

}  // namespace powerlab
