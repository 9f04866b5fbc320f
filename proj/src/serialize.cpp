#include "dialid/serialize.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dialid {

namespace {

std::string coeff_prefix(std::int64_t c, bool first) {
  std::string s;
  if (c < 0)
    s = first ? "-" : " - ";
  else
    s = first ? "" : " + ";
  std::int64_t mag = c < 0 ? -c : c;
  if (mag != 1) s += std::to_string(mag) + " ";
  return s;
}

}  // namespace

std::string identity_str(const TreePoly& p, const std::vector<OpSpec>& ops) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    out += coeff_prefix(c, first);
    out += labeled_tree_str(m, ops);
    first = false;
  }
  return out;
}

std::string di_poly_str(const DiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    out += coeff_prefix(c, first);
    out += m.str();
    first = false;
  }
  return out;
}

std::string word_poly_str(const WordPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    out += coeff_prefix(c, first);
    out += m.str();
    first = false;
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    return s[pos++];
  }
};

LabeledTree parse_tree(Cursor& cur, const std::vector<OpSpec>& ops) {
  cur.skip_ws();
  if (cur.pos >= cur.s.size()) throw std::invalid_argument("parse_identity: unexpected end");
  // operation name or single-letter variable
  std::size_t start = cur.pos;
  while (cur.pos < cur.s.size() &&
         (std::isalnum(static_cast<unsigned char>(cur.s[cur.pos])) || cur.s[cur.pos] == '_'))
    ++cur.pos;
  std::string name = cur.s.substr(start, cur.pos - start);
  if (name.empty()) throw std::invalid_argument("parse_identity: expected a name at '" +
                                                cur.s.substr(start) + "'");
  if (cur.peek() != '(') {
    if (name.size() != 1 || name[0] < 'a' || name[0] > 'z')
      throw std::invalid_argument("parse_identity: variables are single letters, got '" + name + "'");
    return LabeledTree{TypeTree::leaf(), {static_cast<std::uint8_t>(name[0] - 'a')}};
  }
  int op = -1;
  for (int i = 0; i < static_cast<int>(ops.size()); ++i)
    if (ops[static_cast<std::size_t>(i)].name == name) op = i;
  if (op < 0) throw std::invalid_argument("parse_identity: unknown operation '" + name + "'");
  cur.take();  // '('
  std::vector<LabeledTree> kids;
  while (true) {
    kids.push_back(parse_tree(cur, ops));
    char ch = cur.take();
    if (ch == ')') break;
    if (ch != ',') throw std::invalid_argument("parse_identity: expected ',' or ')'");
  }
  if (static_cast<int>(kids.size()) != ops[static_cast<std::size_t>(op)].arity)
    throw std::invalid_argument("parse_identity: arity mismatch for '" + name + "'");
  LabeledTree out;
  std::vector<TypeTree> shapes;
  for (LabeledTree& k : kids) {
    shapes.push_back(k.shape);
    out.leaves.insert(out.leaves.end(), k.leaves.begin(), k.leaves.end());
  }
  out.shape = TypeTree::node(op, std::move(shapes));
  return out;
}

std::int64_t parse_coeff(Cursor& cur) {
  std::int64_t sign = 1;
  while (true) {
    char ch = cur.peek();
    if (ch == '+') {
      cur.take();
    } else if (ch == '-') {
      sign = -sign;
      cur.take();
    } else {
      break;
    }
  }
  std::int64_t mag = 1;
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    mag = 0;
    while (cur.pos < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.pos])))
      mag = mag * 10 + (cur.s[cur.pos++] - '0');
  }
  return sign * mag;
}

}  // namespace

TreePoly parse_identity(const std::string& text, const std::vector<OpSpec>& ops) {
  Cursor cur{text};
  TreePoly out;
  bool first = true;
  while (!cur.done()) {
    char ch = cur.peek();
    if (!first && ch != '+' && ch != '-')
      throw std::invalid_argument("parse_identity: expected '+' or '-'");
    std::int64_t c = parse_coeff(cur);
    out.add(parse_tree(cur, ops), c);
    first = false;
  }
  return out;
}

GroupAlgebraOp parse_group_algebra_op(const std::string& text) {
  Cursor cur{text};
  GroupAlgebraOp op;
  op.arity = 0;
  while (!cur.done()) {
    std::int64_t c = parse_coeff(cur);
    std::vector<std::uint8_t> word;
    cur.skip_ws();
    while (cur.pos < cur.s.size() && cur.s[cur.pos] >= 'a' && cur.s[cur.pos] <= 'z')
      word.push_back(static_cast<std::uint8_t>(cur.s[cur.pos++] - 'a'));
    if (word.empty()) throw std::invalid_argument("parse_group_algebra_op: empty word");
    Permutation sigma(word);
    if (op.arity == 0) op.arity = sigma.degree();
    if (sigma.degree() != op.arity)
      throw std::invalid_argument("parse_group_algebra_op: mixed degrees");
    op.terms[sigma] += c;
    if (op.terms[sigma] == 0) op.terms.erase(sigma);
  }
  if (op.arity == 0) throw std::invalid_argument("parse_group_algebra_op: no terms");
  return op;
}

std::string group_algebra_op_str(const GroupAlgebraOp& op) {
  std::string out;
  bool first = true;
  for (const auto& [sigma, c] : op.terms) {
    out += coeff_prefix(c, first);
    out += sigma.str();
    first = false;
  }
  return out.empty() ? "0" : out;
}

DiOpTemplate parse_di_template(const std::string& text, int arity) {
  Cursor cur{text};
  DiOpTemplate t;
  t.arity = arity;
  while (!cur.done()) {
    std::int64_t c = parse_coeff(cur);
    std::vector<std::uint8_t> word;
    int hat = -1;
    while (true) {
      char ch = cur.peek();
      if (ch == '^') {
        cur.take();
        hat = static_cast<int>(word.size());
        ch = cur.peek();
      }
      if (ch >= 'a' && ch <= 'z') {
        cur.take();
        word.push_back(static_cast<std::uint8_t>(ch - 'a'));
      } else {
        break;
      }
    }
    if (static_cast<int>(word.size()) != arity)
      throw std::invalid_argument("parse_di_template: word length != arity");
    if (hat < 0) throw std::invalid_argument("parse_di_template: missing hat");
    auto key = std::make_pair(Permutation(word), hat);
    t.terms[key] += c;
    if (t.terms[key] == 0) t.terms.erase(key);
  }
  return t;
}

std::string di_template_str(const DiOpTemplate& t) {
  std::string out;
  bool first = true;
  for (const auto& [term, c] : t.terms) {
    const auto& [sigma, hat] = term;
    out += coeff_prefix(c, first);
    for (int i = 0; i < sigma.degree(); ++i) {
      if (i == hat) out += '^';
      out += static_cast<char>('a' + sigma[i]);
    }
    first = false;
  }
  return out.empty() ? "0" : out;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Variety parse_variety_file(const std::string& text) {
  Variety v;
  v.name = "custom";
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> pending_identities;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "name" && toks.size() >= 2) {
      v.name = toks[1];
    } else if (toks[0] == "ops") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        std::size_t slash = toks[i].find('/');
        if (slash == std::string::npos)
          throw std::invalid_argument("variety file: ops entries look like name/arity");
        OpSpec op;
        op.name = toks[i].substr(0, slash);
        op.arity = std::stoi(toks[i].substr(slash + 1));
        v.ops.push_back(op);
      }
    } else if (toks[0] == "sym" && toks.size() == 4) {
      bool found = false;
      for (OpSpec& op : v.ops)
        if (op.name == toks[1]) {
          op.symmetric_args.push_back({std::stoi(toks[2]) - 1, std::stoi(toks[3]) - 1});
          found = true;
        }
      if (!found) throw std::invalid_argument("variety file: sym names unknown operation");
    } else if (toks[0] == "identity") {
      pending_identities.push_back(line.substr(line.find("identity") + 8));
    } else {
      throw std::invalid_argument("variety file: unknown directive '" + toks[0] + "'");
    }
  }
  for (const std::string& s : pending_identities) v.identities.push_back(parse_identity(s, v.ops));
  return v;
}

std::string variety_file_str(const Variety& v) {
  std::string out = "name " + v.name + "\nops";
  for (const OpSpec& op : v.ops) out += " " + op.name + "/" + std::to_string(op.arity);
  out += '\n';
  for (const OpSpec& op : v.ops)
    for (auto [i, j] : op.symmetric_args)
      out += "sym " + op.name + " " + std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
  for (const TreePoly& id : v.identities) out += "identity " + identity_str(id, v.ops) + "\n";
  return out;
}

std::vector<std::pair<std::string, DiOpTemplate>> parse_di_ops_file(const std::string& text) {
  std::vector<std::pair<std::string, DiOpTemplate>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] != "diop" || toks.size() < 3)
      throw std::invalid_argument("ops file: lines look like 'diop name/arity ^abc+cb^a'");
    std::size_t slash = toks[1].find('/');
    if (slash == std::string::npos) throw std::invalid_argument("ops file: missing arity");
    std::string name = toks[1].substr(0, slash);
    int arity = std::stoi(toks[1].substr(slash + 1));
    std::string expr;
    for (std::size_t i = 2; i < toks.size(); ++i) expr += toks[i];
    out.push_back({name, parse_di_template(expr, arity)});
  }
  return out;
}

std::string tsv_matrix(const IntMatrix& m, const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels) {
  std::string out;
  for (const std::string& c : col_labels) {
    out += '\t';
    out += c;
  }
  out += '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    out += row_labels.empty() ? std::to_string(i + 1) : row_labels[static_cast<std::size_t>(i)];
    for (Index j = 0; j < m.cols(); ++j) {
      out += '\t';
      out += std::to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string dialgebra_tsv(const ConcreteDialgebra& d) {
  std::ostringstream out;
  out << "dim\t" << d.dim << "\nmodulus\t" << d.field.modulus() << "\n";
  for (int which = 0; which < 2; ++which) {
    const ModMatrix& t = which == 0 ? d.left : d.right;
    out << "op\t" << (which == 0 ? "left" : "right") << "\n";
    for (Index r = 0; r < t.rows(); ++r)
      for (Index k = 0; k < t.cols(); ++k)
        if (t(r, k) != 0)
          out << (r / d.dim) << '\t' << (r % d.dim) << '\t' << k << '\t' << t(r, k) << "\n";
  }
  return out.str();
}

ConcreteDialgebra parse_dialgebra_tsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int dim = -1;
  int modulus = -1;
  int which = -1;
  ModMatrix left, right;
  while (std::getline(in, line)) {
    std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "dim") {
      dim = std::stoi(toks[1]);
    } else if (toks[0] == "modulus") {
      modulus = std::stoi(toks[1]);
    } else if (toks[0] == "op") {
      if (dim < 0 || modulus < 0) throw std::invalid_argument("dialgebra tsv: header missing");
      if (left.rows() == 0) {
        left = ModMatrix::Zero(static_cast<Index>(dim) * dim, dim);
        right = ModMatrix::Zero(static_cast<Index>(dim) * dim, dim);
      }
      which = (toks[1] == "left") ? 0 : 1;
    } else {
      if (which < 0 || toks.size() != 4) throw std::invalid_argument("dialgebra tsv: bad row");
      Index i = std::stol(toks[0]), j = std::stol(toks[1]), k = std::stol(toks[2]);
      std::int32_t val = static_cast<std::int32_t>(std::stol(toks[3]));
      (which == 0 ? left : right)(i * dim + j, k) = val;
    }
  }
  if (dim < 0 || modulus < 0) throw std::invalid_argument("dialgebra tsv: header missing");
  return ConcreteDialgebra{ModField(modulus), dim, std::move(left), std::move(right)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace dialid
