#include "llull/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "llull/errors.hpp"

namespace llull {

using nlohmann::json;

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

json names(const std::vector<std::string>& options, const OptionSet& set) {
  json out = json::array();
  for (auto x : set) out.push_back(options.at(x));
  return out;
}

std::string joined(const std::vector<std::string>& options, const OptionSet& set,
                   const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += sep;
    out += options.at(set[i]);
  }
  return out;
}

json optional_name(const std::vector<std::string>& options, const std::optional<std::size_t>& x) {
  return x ? json(options.at(*x)) : json(nullptr);
}

std::string table(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
  std::size_t width = 1;
  for (const auto& h : header) width = std::max(width, h.size());
  for (const auto& r : rows) {
    for (const auto& c : r) width = std::max(width, c.size());
  }
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    out += i == 0 ? pad(header[i], width) : "  " + pad(header[i], width);
  }
  out += '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out += i == 0 ? pad(r[i], width) : "  " + pad(r[i], width);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

json matrix_to_json(const LlullMatrix& m) {
  json rows = json::array();
  for (std::size_t x = 0; x < m.size(); ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < m.size(); ++y) {
      row.push_back(x == y ? json(nullptr) : json(format_rational(m(x, y))));
    }
    rows.push_back(std::move(row));
  }
  return json{{"options", m.options()}, {"matrix", std::move(rows)}};
}

LlullMatrix matrix_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("options") || !j.contains("matrix")) {
      throw ParseError(0, "matrix JSON needs \"options\" and \"matrix\"");
    }
    auto options = j.at("options").get<std::vector<std::string>>();
    const auto& rows = j.at("matrix");
    const std::size_t n = options.size();
    if (n == 0) throw ParseError(0, "matrix JSON has no options");
    if (!rows.is_array() || rows.size() != n) throw ParseError(0, "matrix must have n rows");
    std::vector<Rational> values(n * n, Rational(0));
    for (std::size_t x = 0; x < n; ++x) {
      if (!rows[x].is_array() || rows[x].size() != n) {
        throw ParseError(0, "matrix row " + std::to_string(x + 1) + " must have n entries");
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        const auto& cell = rows[x][y];
        if (cell.is_string()) {
          values[x * n + y] = parse_rational(cell.get<std::string>());
        } else if (cell.is_number_integer()) {
          values[x * n + y] = Rational(cell.get<long long>());
        } else {
          throw ParseError(0, "matrix entries must be \"num/den\" strings");
        }
      }
    }
    return LlullMatrix(std::move(options), std::move(values));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(0, std::string("bad matrix JSON: ") + e.what());
  }
}

LlullMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("bad matrix JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

json scores_to_json(const std::vector<std::string>& options, const ScoreVectors& s) {
  auto column = [&](const std::vector<Rational>& v) {
    json out = json::object();
    for (std::size_t x = 0; x < options.size(); ++x) out[options[x]] = format_rational(v[x]);
    return out;
  };
  return json{{"plurality", column(s.plurality)},
              {"antiplurality", column(s.antiplurality)},
              {"last", column(s.last)},
              {"approval", column(s.approval)},
              {"disapproval", column(s.disapproval)}};
}

std::string matrix_to_text(const LlullMatrix& m) {
  std::vector<std::string> header{""};
  header.insert(header.end(), m.options().begin(), m.options().end());
  std::vector<std::vector<std::string>> rows;
  for (std::size_t x = 0; x < m.size(); ++x) {
    std::vector<std::string> row{m.options()[x]};
    for (std::size_t y = 0; y < m.size(); ++y) {
      row.push_back(x == y ? "-" : format_rational(m(x, y)));
    }
    rows.push_back(std::move(row));
  }
  return table(header, rows);
}

std::string scores_to_text(const std::vector<std::string>& options, const ScoreVectors& s) {
  std::vector<std::string> header{"", "plurality", "antiplurality", "last", "approval",
                                  "disapproval"};
  std::vector<std::vector<std::string>> rows;
  for (std::size_t x = 0; x < options.size(); ++x) {
    rows.push_back({options[x], format_rational(s.plurality[x]),
                    format_rational(s.antiplurality[x]), format_rational(s.last[x]),
                    format_rational(s.approval[x]), format_rational(s.disapproval[x])});
  }
  return table(header, rows);
}

json result_to_json(const MethodResult& r) {
  const auto& opts = r.options;
  json j;
  j["method"] = std::string(to_string(r.method));
  j["init"] = std::string(to_string(r.init));
  j["options"] = opts;
  j["winners"] = names(opts, r.winners);

  json acc = json::object();
  for (std::size_t x = 0; x < r.acceptabilities.size(); ++x) {
    acc[opts[x]] = format_rational(r.acceptabilities[x]);
  }
  j["acceptabilities"] = std::move(acc);

  if (r.revised) {
    json revised = json::object();
    const auto& u = r.revised->universe();
    for (std::uint32_t i = 0; i < u.size(); ++i) {
      revised[u.label(Literal{i})] = format_rational(r.revised->values()[i]);
    }
    j["revised"] = std::move(revised);
  } else {
    j["revised"] = nullptr;
  }
  if (r.decision) {
    json accepted = json::array();
    const auto& u = r.decision->universe();
    for (std::uint32_t i = 0; i < u.size(); ++i) {
      if ((*r.decision)[Literal{i}] == Verdict::kAccepted) accepted.push_back(u.label(Literal{i}));
    }
    j["decision"] = json{{"margin", format_rational(r.decision->margin())},
                         {"accepted", std::move(accepted)}};
  } else {
    j["decision"] = nullptr;
  }
  json ranking = json::array();
  for (const auto& layer : r.ranking) ranking.push_back(names(opts, layer));
  j["ranking"] = std::move(ranking);

  const auto& d = r.diagnostics;
  json diag;
  diag["smith_set"] = names(opts, d.smith_set);
  diag["condorcet"] = json{{"winner", optional_name(opts, d.condorcet.winner)},
                           {"margin_winner", optional_name(opts, d.condorcet.margin_winner)},
                           {"loser", optional_name(opts, d.condorcet.loser)}};
  if (d.maximin) {
    json sets = json::array();
    for (const auto& s : d.maximin->sets) sets.push_back(names(opts, s));
    diag["maximin_sets"] = json{{"sets", std::move(sets)},
                                {"sigma", format_rational(d.maximin->sigma)}};
  } else {
    diag["maximin_sets"] = nullptr;
  }
  json rounds = json::array();
  for (const auto& round : d.rounds) {
    json np = json::object();
    for (std::size_t i = 0; i < round.options.size(); ++i) {
      np[opts[round.options[i]]] = format_rational(round.not_prominent[i]);
    }
    rounds.push_back(json{{"options", names(opts, round.options)},
                          {"winners", names(opts, round.winners)},
                          {"not_prominent", std::move(np)}});
  }
  diag["refinement_rounds"] = std::move(rounds);
  diag["one_step_winner"] = optional_name(opts, d.one_step_winner);
  j["diagnostics"] = std::move(diag);
  return j;
}

std::string result_to_text(const MethodResult& r) {
  const auto& opts = r.options;
  std::ostringstream out;
  out << "method: " << to_string(r.method) << '\n';
  out << "init: " << to_string(r.init) << '\n';
  out << "winners: " << joined(opts, r.winners) << '\n';
  if (!r.acceptabilities.empty()) {
    out << "acceptabilities:\n";
    std::size_t width = 0;
    for (const auto& o : opts) width = std::max(width, o.size());
    for (std::size_t x = 0; x < r.acceptabilities.size(); ++x) {
      out << "  " << opts[x] << std::string(width - opts[x].size(), ' ') << "  "
          << format_rational(r.acceptabilities[x]) << '\n';
    }
  }
  if (!r.ranking.empty()) {
    out << "ranking:";
    for (const auto& layer : r.ranking) out << " [" << joined(opts, layer, ",") << "]";
    out << '\n';
  }
  const auto& d = r.diagnostics;
  out << "smith set: " << joined(opts, d.smith_set) << '\n';
  auto name_or_none = [&](const std::optional<std::size_t>& x) {
    return x ? opts[*x] : std::string("none");
  };
  out << "condorcet winner: " << name_or_none(d.condorcet.winner) << '\n';
  out << "condorcet margin winner: " << name_or_none(d.condorcet.margin_winner) << '\n';
  out << "condorcet loser: " << name_or_none(d.condorcet.loser) << '\n';
  if (d.maximin) {
    out << "maximin sets:";
    for (const auto& s : d.maximin->sets) out << " {" << joined(opts, s, ",") << "}";
    out << " sigma " << format_rational(d.maximin->sigma) << '\n';
  }
  for (std::size_t i = 0; i < d.rounds.size(); ++i) {
    out << "round " << i + 1 << ": " << joined(opts, d.rounds[i].options) << " -> "
        << joined(opts, d.rounds[i].winners) << '\n';
  }
  if (d.one_step_winner) out << "one-step winner: " << opts[*d.one_step_winner] << '\n';
  if (r.revised) {
    out << "revised:\n";
    const auto& u = r.revised->universe();
    std::size_t width = 0;
    for (std::uint32_t i = 0; i < u.size(); ++i) width = std::max(width, u.label(Literal{i}).size());
    for (std::uint32_t i = 0; i < u.size(); ++i) {
      const auto& label = u.label(Literal{i});
      out << "  " << label << std::string(width - label.size(), ' ') << "  "
          << format_rational(r.revised->values()[i]);
      if (r.decision && (*r.decision)[Literal{i}] == Verdict::kAccepted) out << "  accepted";
      out << '\n';
    }
  }
  return out.str();
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace llull
