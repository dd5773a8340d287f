#include "revcert/json_io.hpp"

#include <algorithm>

namespace revcert {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::string require_string(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

std::size_t require_count(const Json& j, const char* key, const std::string& where) {
  const Json& v = require(j, key, where);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    fail(where + "." + key, "expected a non-negative integer");
  return v.get<std::size_t>();
}

ScalarDomain domain_field(const Json& j, const std::string& where) {
  const std::string text = require_string(j, "domain", where);
  try {
    return parse_domain(text);
  } catch (const Error& e) {
    fail(where + ".domain", e.what());
  }
}

Quaternion scalar_field(const Json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a scalar string");
  try {
    return parse_scalar(v.get<std::string>());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    fail(where, e.what());
  }
}

Level level_from(const std::string& text, const std::string& where) {
  if (text == "lie") return Level::Lie;
  if (text == "group") return Level::Group;
  fail(where, "expected \"lie\" or \"group\"");
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_scalar(m(r, c)));
    entries.push_back(std::move(row));
  }
  return Json{{"domain", to_string(m.domain())}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix matrix_from_json(const Json& j) {
  const ScalarDomain domain = domain_field(j, "matrix");
  const std::size_t rows = require_count(j, "rows", "matrix");
  const std::size_t cols = require_count(j, "cols", "matrix");
  const Json& entries = require(j, "entries", "matrix");
  if (!entries.is_array() || entries.size() != rows) fail("matrix.entries", "expected " + std::to_string(rows) + " rows");
  Matrix m(domain, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = entries[r];
    const std::string where = "matrix.entries[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != cols) fail(where, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, scalar_field(row[c], where + "[" + std::to_string(c) + "]"));
  }
  return m;
}

Json spec_to_json(const JordanSpec& spec) {
  Json blocks = Json::array();
  for (const auto& b : spec.blocks)
    blocks.push_back(
        {{"eigenvalue", format_scalar(b.eigenvalue)}, {"size", b.size}, {"realComplexPair", b.real_complex_pair}});
  return Json{{"domain", to_string(spec.domain)}, {"blocks", blocks}};
}

JordanSpec spec_from_json(const Json& j) {
  JordanSpec spec{domain_field(j, "spec"), {}};
  const Json& blocks = require(j, "blocks", "spec");
  if (!blocks.is_array()) fail("spec.blocks", "expected an array");
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const std::string where = "spec.blocks[" + std::to_string(k) + "]";
    const Json& b = blocks[k];
    const Quaternion q = scalar_field(require(b, "eigenvalue", where), where + ".eigenvalue");
    JordanBlock block;
    block.size = require_count(b, "size", where);
    if (const auto it = b.find("realComplexPair"); it != b.end()) {
      if (!it->is_boolean()) fail(where + ".realComplexPair", "expected a boolean");
      block.real_complex_pair = it->get<bool>();
    }
    if (spec.domain == ScalarDomain::H) {
      block.eigenvalue = class_representative(q).representative;
    } else {
      if (!q.is_complex()) throw Error(ErrorCode::DomainMismatch, where + ": quaternion eigenvalue outside H");
      block.eigenvalue = q.to_gaussian();
    }
    spec.blocks.push_back(std::move(block));
  }
  return canonicalize(std::move(spec));
}

Json plan_to_json(const PairingPlan& plan) {
  Json out = Json::array();
  for (const auto& e : plan.entries)
    out.push_back({{"kind", e.is_pair() ? "pair" : "singleton"}, {"blocks", e.blocks}, {"pattern", to_string(e.pattern)}});
  return out;
}

PairingPlan plan_from_json(const Json& j) {
  if (!j.is_array()) fail("plan", "expected an array");
  PairingPlan plan;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string where = "plan[" + std::to_string(k) + "]";
    PlanEntry e;
    const Json& blocks = require(j[k], "blocks", where);
    if (!blocks.is_array() || blocks.empty() || blocks.size() > 2) fail(where + ".blocks", "expected one or two indices");
    for (const auto& idx : blocks) {
      if (!idx.is_number_unsigned()) fail(where + ".blocks", "expected non-negative integers");
      e.blocks.push_back(idx.get<std::size_t>());
    }
    const std::string kind = require_string(j[k], "kind", where);
    if (kind != (e.is_pair() ? "pair" : "singleton")) fail(where + ".kind", "does not match the block count");
    try {
      e.pattern = parse_pattern(require_string(j[k], "pattern", where));
    } catch (const Error& err) {
      fail(where + ".pattern", err.what());
    }
    plan.entries.push_back(std::move(e));
  }
  return plan;
}

Json verdict_to_json(const Verdict& v) {
  return Json{{"answer", to_string(v.answer)},
              {"reason", v.reason},
              {"plan", v.plan ? plan_to_json(*v.plan) : Json(nullptr)}};
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  try {
    v.answer = parse_answer(require_string(j, "answer", "verdict"));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    fail("verdict.answer", e.what());
  }
  v.reason = require_string(j, "reason", "verdict");
  if (const auto it = j.find("plan"); it != j.end() && !it->is_null()) v.plan = plan_from_json(*it);
  return v;
}

Json witness_to_json(const Witness& w) {
  Json provenance = Json::array();
  for (auto p : w.provenance) provenance.push_back(to_string(p));
  return Json{{"mode", to_string(w.mode)}, {"g", matrix_to_json(w.g)}, {"provenance", provenance}};
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.mode = level_from(require_string(j, "mode", "witness"), "witness.mode");
  w.g = matrix_from_json(require(j, "g", "witness"));
  const Json& provenance = require(j, "provenance", "witness");
  if (!provenance.is_array()) fail("witness.provenance", "expected an array");
  for (const auto& p : provenance) {
    if (!p.is_string()) fail("witness.provenance", "expected pattern strings");
    try {
      w.provenance.push_back(parse_pattern(p.get<std::string>()));
    } catch (const Error& e) {
      fail("witness.provenance", e.what());
    }
  }
  return w;
}

Json report_to_json(const OracleReport& r) {
  return Json{{"outcome", to_string(r.outcome)},
              {"attempts", r.attempts},
              {"evidence", r.evidence ? witness_to_json(*r.evidence) : Json(nullptr)}};
}

OracleReport report_from_json(const Json& j) {
  OracleReport r;
  try {
    r.outcome = parse_outcome(require_string(j, "outcome", "report"));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    fail("report.outcome", e.what());
  }
  r.attempts = require_count(j, "attempts", "report");
  if (const auto it = j.find("evidence"); it != j.end() && !it->is_null()) r.evidence = witness_from_json(*it);
  return r;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(at), '\n');
    const auto last_nl = text.rfind('\n', at == 0 ? 0 : at - 1);
    const std::size_t column = last_nl == std::string_view::npos || at == 0 ? at + 1 : at - last_nl;
    throw Error(ErrorCode::ParseError,
                "JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(column));
  }
}

Input parse_input(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) fail("(document)", "expected a JSON object");
  if (j.contains("blocks")) return spec_from_json(j);
  if (j.contains("entries")) return matrix_from_json(j);
  fail("(document)", "expected a matrix (\"entries\") or a Jordan spec (\"blocks\")");
}

}  // namespace revcert
