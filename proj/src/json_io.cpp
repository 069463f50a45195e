#include "pqg/json_io.hpp"

#include <cmath>
#include <cstdio>

namespace pqg {

namespace {

Json point_to_json(const ComplexPoint& p) {
  Json arr = Json::array();
  for (const auto& c : p.coords) arr.push_back(Json::array({c.real(), c.imag()}));
  return arr;
}

ComplexPoint point_from_json(const Json& j) {
  ComplexPoint p;
  for (const auto& pair : j)
    p.coords.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  return p;
}

MultiIndex index_from_json(const Json& j) {
  MultiIndex a;
  for (const auto& e : j) a.push_back(e.get<int>());
  return a;
}

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

void dump_value(const Json& j, std::string& out, int float_digits, int indent,
                int depth) {
  const std::string pad(indent > 0 ? static_cast<std::size_t>(indent) * depth : 0, ' ');
  const std::string pad_in(indent > 0 ? static_cast<std::size_t>(indent) * (depth + 1) : 0, ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) { out += "{}"; return; }
      out += '{';
      out += nl;
      bool first = true;
      for (auto it = j.cbegin(); it != j.cend(); ++it) {
        if (!first) { out += ','; out += nl; }
        first = false;
        out += pad_in;
        append_escaped(out, it.key());
        out += indent > 0 ? ": " : ":";
        dump_value(it.value(), out, float_digits, indent, depth + 1);
      }
      out += nl;
      out += pad;
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) { out += "[]"; return; }
      out += '[';
      out += nl;
      bool first = true;
      for (const auto& e : j) {
        if (!first) { out += ','; out += nl; }
        first = false;
        out += pad_in;
        dump_value(e, out, float_digits, indent, depth + 1);
      }
      out += nl;
      out += pad;
      out += ']';
      return;
    }
    case Json::value_t::string:
      append_escaped(out, j.get<std::string>());
      return;
    case Json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case Json::value_t::number_integer: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%lld",
                    static_cast<long long>(j.get<std::int64_t>()));
      out += buf;
      return;
    }
    case Json::value_t::number_unsigned: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%llu",
                    static_cast<unsigned long long>(j.get<std::uint64_t>()));
      out += buf;
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v))
        throw std::invalid_argument("dump_json: non-finite number");
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.*g", float_digits, v);
      out += buf;
      return;
    }
    default:
      out += "null";
      return;
  }
}

}  // namespace

Json arrow_to_json(const Arrow& a) {
  return Json{{"source", point_to_json(a.source)},
              {"action", a.action},
              {"target", point_to_json(a.target)}};
}

Arrow arrow_from_json(const Json& j, const PhaseSpaceConfig& cfg) {
  return make_arrow(point_from_json(j.at("source")),
                    j.at("action").get<double>(),
                    point_from_json(j.at("target")), cfg);
}

Json grid_to_json(const QuadratureGrid& g) {
  Json nodes = Json::array();
  for (const auto& p : g.nodes) nodes.push_back(point_to_json(p));
  return Json{{"n", g.n},
              {"hbar", g.hbar},
              {"order", g.order},
              {"nodes", nodes},
              {"weights", g.weights}};
}

QuadratureGrid grid_from_json(const Json& j) {
  QuadratureGrid g;
  g.n = j.at("n").get<int>();
  g.hbar = j.at("hbar").get<double>();
  g.order = j.at("order").get<int>();
  for (const auto& node : j.at("nodes")) g.nodes.push_back(point_from_json(node));
  g.weights = j.at("weights").get<std::vector<double>>();
  if (g.nodes.size() != g.weights.size())
    throw std::invalid_argument("grid_from_json: nodes/weights length mismatch");
  return g;
}

Json element_to_json(const AlgebraElement& e) {
  Json entries = Json::array();
  for (const auto& [key, value] : e.coeffs)
    entries.push_back(Json{{"a", key.first},
                           {"b", key.second},
                           {"re", value.real()},
                           {"im", value.imag()}});
  return Json{{"n", e.n},
              {"hbar", e.hbar},
              {"cutoff", e.cutoff},
              {"mode", e.mode},
              {"entries", entries}};
}

AlgebraElement element_from_json(const Json& j) {
  const PhaseSpaceConfig cfg(j.at("n").get<int>(), j.at("hbar").get<double>());
  AlgebraElement e = zero_element(cfg, j.at("cutoff").get<int>(),
                                  j.at("mode").get<int>());
  for (const auto& entry : j.at("entries")) {
    const MultiIndex a = index_from_json(entry.at("a"));
    const MultiIndex b = index_from_json(entry.at("b"));
    if (a.size() != static_cast<std::size_t>(e.n) ||
        b.size() != static_cast<std::size_t>(e.n))
      throw std::invalid_argument("element_from_json: multi-index length mismatch");
    if (total_degree(a) > e.cutoff || total_degree(b) > e.cutoff)
      throw std::invalid_argument("element_from_json: entry beyond cutoff");
    e.coeffs[{a, b}] =
        Complex(entry.at("re").get<double>(), entry.at("im").get<double>());
  }
  return e;
}

Json state_to_json(const PolarizedState& s, const PhaseSpaceConfig& cfg) {
  Json entries = Json::array();
  for (const auto& [a, value] : s.coeffs)
    entries.push_back(Json{{"a", a}, {"re", value.real()}, {"im", value.imag()}});
  return Json{{"n", cfg.n},
              {"hbar", cfg.hbar},
              {"cutoff", s.cutoff},
              {"entries", entries}};
}

std::pair<PolarizedState, PhaseSpaceConfig> state_from_json(const Json& j) {
  const PhaseSpaceConfig cfg(j.at("n").get<int>(), j.at("hbar").get<double>());
  PolarizedState s = zero_state(j.at("cutoff").get<int>());
  for (const auto& entry : j.at("entries")) {
    const MultiIndex a = index_from_json(entry.at("a"));
    if (a.size() != static_cast<std::size_t>(cfg.n))
      throw std::invalid_argument("state_from_json: multi-index length mismatch");
    if (total_degree(a) > s.cutoff)
      throw std::invalid_argument("state_from_json: entry beyond cutoff");
    s.coeffs[a] =
        Complex(entry.at("re").get<double>(), entry.at("im").get<double>());
  }
  return {std::move(s), cfg};
}

Json series_to_json(const CharacterSeries& s) {
  return Json{{"n", s.n},
              {"cutoff", s.cutoff},
              {"offset_num", s.offset_num()},
              {"offset_den", CharacterSeries::offset_den},
              {"coeffs", s.coeffs}};
}

CharacterSeries series_from_json(const Json& j) {
  CharacterSeries s;
  s.n = j.at("n").get<int>();
  s.cutoff = j.at("cutoff").get<int>();
  s.coeffs = j.at("coeffs").get<std::vector<std::int64_t>>();
  if (j.at("offset_num").get<int>() != s.n ||
      j.at("offset_den").get<int>() != CharacterSeries::offset_den)
    throw std::invalid_argument("series_from_json: unexpected level offset");
  return s;
}

std::string dump_json(const Json& j, int float_digits, int indent) {
  std::string out;
  dump_value(j, out, float_digits, indent, 0);
  out += '\n';
  return out;
}

}  // namespace pqg
