#include "hamdec/lp_format.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "hamdec/errors.hpp"

namespace hamdec::ilp {
namespace {

constexpr int kTermsPerLine = 8;
constexpr int kNamesPerLine = 10;

const char* sense_token(Sense s) {
  switch (s) {
    case Sense::LessEqual:
      return "<=";
    case Sense::GreaterEqual:
      return ">=";
    case Sense::Equal:
      return "=";
  }
  return "?";
}

void write_names(std::ostringstream& out, const IlpModel& model, VarKind kind) {
  int on_line = 0;
  for (const Variable& v : model.vars()) {
    if (v.kind != kind) continue;
    out << ' ' << v.name;
    if (++on_line == kNamesPerLine) {
      out << '\n';
      on_line = 0;
    }
  }
  if (on_line != 0) out << '\n';
}

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '\\') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

bool parse_int(std::string_view token, Value& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

bool is_sense(std::string_view t) {
  return t == "<=" || t == ">=" || t == "=" || t == "=<" || t == "=>";
}

Sense parse_sense(std::string_view t) {
  if (t == "<=" || t == "=<") return Sense::LessEqual;
  if (t == ">=" || t == "=>") return Sense::GreaterEqual;
  return Sense::Equal;
}

std::string lower(std::string_view t) {
  std::string s(t);
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

[[noreturn]] void fail(const std::string& what) {
  throw InputError("LP parse error: " + what);
}

}  // namespace

std::string export_lp(const IlpModel& model) {
  std::ostringstream out;
  out << "Minimize\n obj: 0\nSubject To\n";
  for (const LinearConstraint& c : model.constraints()) {
    out << ' ' << c.name << ':';
    if (c.terms.empty()) {
      out << " 0";
      if (model.var_count() > 0) out << ' ' << model.var(0).name;
    }
    int on_line = 0;
    for (const Term& t : c.terms) {
      if (on_line == kTermsPerLine) {
        out << "\n   ";
        on_line = 0;
      }
      out << ' ' << (t.coef >= 0 ? "+" : "") << t.coef << ' '
          << model.var(t.var).name;
      ++on_line;
    }
    out << ' ' << sense_token(c.sense) << ' ' << c.rhs << '\n';
  }
  out << "Bounds\n";
  for (const Variable& v : model.vars()) {
    out << ' ' << v.lo << " <= " << v.name << " <= " << v.hi << '\n';
  }
  out << "Binaries\n";
  write_names(out, model, VarKind::Binary);
  out << "Generals\n";
  write_names(out, model, VarKind::Integer);
  out << "End\n";
  return out.str();
}

IlpModel parse_lp(std::string_view text) {
  enum class Section { None, Objective, Constraints, Bounds, Binaries, Generals, End };
  const auto tokens = tokenize(text);

  struct PendingVar {
    std::string name;
    Value lo;
    Value hi;
    VarKind kind = VarKind::Integer;
    bool typed = false;
  };
  std::vector<PendingVar> vars;
  std::unordered_map<std::string, VarId> index;
  struct PendingTerm {
    Value coef;
    std::string var;
  };
  struct PendingConstraint {
    std::string name;
    std::vector<PendingTerm> terms;
    Sense sense;
    Value rhs;
  };
  std::vector<PendingConstraint> constraints;

  Section section = Section::None;
  std::size_t i = 0;
  auto section_of = [](std::string_view t) -> std::optional<Section> {
    const std::string k = lower(t);
    if (k == "minimize" || k == "maximize") return Section::Objective;
    if (k == "subject") return Section::Constraints;
    if (k == "bounds") return Section::Bounds;
    if (k == "binaries" || k == "binary") return Section::Binaries;
    if (k == "generals" || k == "general") return Section::Generals;
    if (k == "end") return Section::End;
    return std::nullopt;
  };

  while (i < tokens.size() && section != Section::End) {
    if (auto next = section_of(tokens[i])) {
      section = *next;
      ++i;
      if (section == Section::Constraints) {
        if (i >= tokens.size() || lower(tokens[i]) != "to") fail("expected 'Subject To'");
        ++i;
      }
      continue;
    }
    switch (section) {
      case Section::None:
        fail("content before the first section");
      case Section::Objective:
        ++i;  // the objective is always zero; skip its tokens
        break;
      case Section::Constraints: {
        std::string_view name_token = tokens[i];
        if (name_token.size() < 2 || name_token.back() != ':') {
          fail("expected constraint name, got '" + std::string(name_token) + "'");
        }
        PendingConstraint c;
        c.name = std::string(name_token.substr(0, name_token.size() - 1));
        ++i;
        while (i < tokens.size() && !is_sense(tokens[i])) {
          Value coef = 0;
          if (!parse_int(tokens[i], coef)) {
            fail("expected coefficient in " + c.name);
          }
          ++i;
          if (i < tokens.size() && is_sense(tokens[i])) {
            if (coef != 0) fail("constant term in " + c.name);
            break;
          }
          if (i >= tokens.size()) fail("truncated constraint " + c.name);
          c.terms.push_back(PendingTerm{coef, std::string(tokens[i])});
          ++i;
        }
        if (i + 1 >= tokens.size()) fail("missing sense or rhs in " + c.name);
        c.sense = parse_sense(tokens[i]);
        if (!parse_int(tokens[i + 1], c.rhs)) fail("bad rhs in " + c.name);
        i += 2;
        constraints.push_back(std::move(c));
        break;
      }
      case Section::Bounds: {
        if (i + 4 >= tokens.size()) fail("truncated bound");
        Value lo = 0;
        Value hi = 0;
        if (!parse_int(tokens[i], lo) || tokens[i + 1] != "<=" ||
            tokens[i + 3] != "<=" || !parse_int(tokens[i + 4], hi)) {
          fail("bound must read 'lo <= name <= hi'");
        }
        const std::string name(tokens[i + 2]);
        if (index.contains(name)) fail("duplicate bound for " + name);
        index.emplace(name, static_cast<VarId>(vars.size()));
        vars.push_back(PendingVar{name, lo, hi});
        i += 5;
        break;
      }
      case Section::Binaries:
      case Section::Generals: {
        const auto it = index.find(std::string(tokens[i]));
        if (it == index.end()) fail("type given for unbounded variable " + std::string(tokens[i]));
        vars[it->second].kind =
            section == Section::Binaries ? VarKind::Binary : VarKind::Integer;
        vars[it->second].typed = true;
        ++i;
        break;
      }
      case Section::End:
        break;
    }
  }
  if (section != Section::End) fail("missing End");

  IlpModel model;
  for (const PendingVar& v : vars) {
    if (!v.typed) fail("variable " + v.name + " has no Binaries/Generals entry");
    if (v.kind == VarKind::Binary) {
      if (v.lo != 0 || v.hi != 1) fail("binary " + v.name + " with bounds other than [0,1]");
      model.add_binary(v.name);
    } else {
      model.add_integer(v.name, v.lo, v.hi);
    }
  }
  for (PendingConstraint& c : constraints) {
    LinearConstraint lc;
    lc.name = std::move(c.name);
    lc.sense = c.sense;
    lc.rhs = c.rhs;
    for (const PendingTerm& t : c.terms) {
      const auto it = index.find(t.var);
      if (it == index.end()) fail("unknown variable " + t.var);
      lc.terms.push_back(Term{t.coef, it->second});
    }
    model.add_constraint(std::move(lc));
  }
  return model;
}

}  // namespace hamdec::ilp
