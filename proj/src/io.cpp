#include "linsyz/io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace linsyz {

ParseError::ParseError(std::size_t line, const std::string& msg)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

struct Line {
  std::size_t no = 0;
  std::string text;
};

/// Non-empty lines with comments stripped.
std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({no, std::move(t)});
  }
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

long parse_int(const Line& l, std::string_view text, std::string_view what) {
  const std::string t(text);
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != t.size()) throw ParseError(l.no, "expected an integer for " + std::string(what) + ", got '" + t + "'");
  return v;
}

/// "key=value" -> value
long keyed(const Line& l, const std::string& word, std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (word.rfind(prefix, 0) != 0) throw ParseError(l.no, "expected " + prefix + "..., got '" + word + "'");
  return parse_int(l, std::string_view(word).substr(prefix.size()), key);
}

void expect_header(const std::vector<Line>& lines, std::string_view header) {
  if (lines.empty()) throw ParseError(0, "empty input, expected '" + std::string(header) + "'");
  if (lines[0].text != header) throw ParseError(lines[0].no, "expected '" + std::string(header) + "'");
}

Field parse_field_line(const std::vector<Line>& lines, std::size_t idx) {
  if (idx >= lines.size()) throw ParseError(0, "missing field line");
  const Line& l = lines[idx];
  if (l.text.rfind("field ", 0) != 0) throw ParseError(l.no, "expected 'field Fp <p>' or 'field Q'");
  try {
    return Field::parse(trim(std::string_view(l.text).substr(6)));
  } catch (const std::invalid_argument& e) {
    throw ParseError(l.no, e.what());
  }
}

Scalar parse_scalar_at(const Field& f, const Line& l, const std::string& text) {
  try {
    return f.parse_scalar(text);
  } catch (const std::exception& e) {
    throw ParseError(l.no, "bad scalar '" + text + "': " + e.what());
  }
}

std::string coef_string(const Scalar& c, bool& negative) {
  std::string s = c.to_string();
  negative = !s.empty() && s[0] == '-';
  if (negative) s.erase(0, 1);
  return s;
}

void append_term(std::string& out, const Scalar& c, const std::string& mono) {
  bool neg = false;
  std::string mag = coef_string(c, neg);
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (mono.empty()) {
    out += mag;
  } else {
    if (mag != "1") out += mag + "*";
    out += mono;
  }
}

}  // namespace

Vec parse_linear_form(const Field& f, int n, std::string_view text) {
  Vec out = zero_vec(f, static_cast<std::size_t>(n));
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError(0, "empty linear form");
  if (s == "0") return out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw ParseError(0, "expected + or - in '" + std::string(text) + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    const auto xpos = term.find('x');
    if (xpos == std::string::npos) throw ParseError(0, "term '" + term + "' has no variable");
    std::string coef = term.substr(0, xpos);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    Scalar c = f.one();
    try {
      if (!coef.empty()) c = f.parse_scalar(coef);
    } catch (const std::exception& e) {
      throw ParseError(0, e.what());
    }
    const std::string idx = term.substr(xpos + 1);
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(idx, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != idx.size()) throw ParseError(0, "bad variable in term '" + term + "'");
    if (k < 1 || k > n) throw ParseError(0, "variable x" + idx + " out of range 1.." + std::to_string(n));
    if (neg) c = -c;
    out[static_cast<std::size_t>(k - 1)] += c;
  }
  return out;
}

std::string format_linear(const Vec& form) {
  std::string out;
  for (std::size_t k = 0; k < form.size(); ++k)
    if (!form[k].is_zero()) append_term(out, form[k], "x" + std::to_string(k + 1));
  return out.empty() ? "0" : out;
}

std::string format_exterior(const ExtElement& e) {
  const ExteriorBasis eb(e.space.n, e.degree);
  const char var = e.space.dual ? 'e' : 'x';
  std::string out;
  for (std::size_t s = 0; s < eb.size(); ++s) {
    if (e.coords[s].is_zero()) continue;
    std::string mono;
    for (int t = 0; t < e.space.n; ++t)
      if (eb.subset(s) >> t & 1U) mono += (mono.empty() ? "" : "^") + std::string(1, var) + std::to_string(t + 1);
    append_term(out, e.coords[s], mono);
  }
  return out.empty() ? "0" : out;
}

std::string format_symmetric(const SymElement& e) {
  const SymmetricBasis sb(e.n, e.degree);
  std::string out;
  for (std::size_t s = 0; s < sb.size(); ++s) {
    if (e.coords[s].is_zero()) continue;
    std::string mono;
    const auto& ex = sb.monomial(s);
    for (int t = 0; t < e.n; ++t) {
      if (ex[static_cast<std::size_t>(t)] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(t + 1);
      if (ex[static_cast<std::size_t>(t)] > 1) mono += "^" + std::to_string(ex[static_cast<std::size_t>(t)]);
    }
    append_term(out, e.coords[s], mono);
  }
  return out.empty() ? "0" : out;
}

LinearFormMatrix read_linform_matrix(std::istream& in) {
  const auto lines = read_lines(in);
  expect_header(lines, "linform-matrix v1");
  const Field f = parse_field_line(lines, 1);
  if (lines.size() < 3) throw ParseError(0, "missing dims line");
  const Line& dl = lines[2];
  const auto dw = words(dl.text);
  if (dw.size() != 4 || dw[0] != "dims") throw ParseError(dl.no, "expected 'dims a=<a> b=<b> n=<n>'");
  const long a = keyed(dl, dw[1], "a"), b = keyed(dl, dw[2], "b"), n = keyed(dl, dw[3], "n");
  if (a < 1 || b < 1 || n < 1 || n > 20 || a > 64 || b > 64) throw ParseError(dl.no, "dims out of range");
  LinearFormMatrix m(f, static_cast<std::size_t>(b), static_cast<std::size_t>(a), static_cast<int>(n));
  std::vector<bool> seen(static_cast<std::size_t>(a * b), false);
  for (std::size_t t = 3; t < lines.size(); ++t) {
    const Line& l = lines[t];
    const auto colon = l.text.find(':');
    if (colon == std::string::npos) throw ParseError(l.no, "expected 'entry j=<j> i=<i> : <form>'");
    const auto lw = words(l.text.substr(0, colon));
    if (lw.size() != 3 || lw[0] != "entry") throw ParseError(l.no, "expected 'entry j=<j> i=<i> : <form>'");
    const long j = keyed(l, lw[1], "j"), i = keyed(l, lw[2], "i");
    if (j < 1 || j > b || i < 1 || i > a) throw ParseError(l.no, "entry index out of range");
    const std::size_t slot = static_cast<std::size_t>((j - 1) * a + (i - 1));
    if (seen[slot]) throw ParseError(l.no, "duplicate entry j=" + std::to_string(j) + " i=" + std::to_string(i));
    seen[slot] = true;
    try {
      m.set_entry(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1),
                  parse_linear_form(f, static_cast<int>(n), l.text.substr(colon + 1)));
    } catch (const std::exception& e) {
      throw ParseError(l.no, e.what());
    }
  }
  return m;
}

void write_linform_matrix(std::ostream& out, const LinearFormMatrix& m) {
  out << "linform-matrix v1\n";
  out << "field " << m.field().to_string() << "\n";
  out << "dims a=" << m.a() << " b=" << m.b() << " n=" << m.n() << "\n";
  for (std::size_t j = 0; j < m.b(); ++j)
    for (std::size_t i = 0; i < m.a(); ++i) {
      const Vec e = m.entry(j, i);
      if (is_zero(e)) continue;
      out << "entry j=" << (j + 1) << " i=" << (i + 1) << " : " << format_linear(e) << "\n";
    }
}

GradedModule read_graded_module(std::istream& in) {
  const auto lines = read_lines(in);
  expect_header(lines, "graded-module v1");
  const Field f = parse_field_line(lines, 1);
  if (lines.size() < 3) throw ParseError(0, "missing shape line");
  const Line& sl = lines[2];
  const auto sw = words(sl.text);
  if (sw.size() < 4 || sw[1] != "degrees" || sw[3] != "dims")
    throw ParseError(sl.no, "expected 'n=<n> degrees <lo>..<hi> dims <d_lo> ... <d_hi>'");
  const long n = keyed(sl, sw[0], "n");
  if (n < 1 || n > 20) throw ParseError(sl.no, "n out of range 1..20");
  const auto dots = sw[2].find("..");
  if (dots == std::string::npos) throw ParseError(sl.no, "expected a degree range '<lo>..<hi>'");
  const long lo = parse_int(sl, std::string_view(sw[2]).substr(0, dots), "lowest degree");
  const long hi = parse_int(sl, std::string_view(sw[2]).substr(dots + 2), "highest degree");
  if (hi < lo || hi - lo > 64) throw ParseError(sl.no, "bad degree range");
  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  if (sw.size() != 4 + count)
    throw ParseError(sl.no, "expected " + std::to_string(count) + " dims, got " + std::to_string(sw.size() - 4));
  std::vector<std::size_t> dims;
  for (std::size_t t = 0; t < count; ++t) {
    const long d = parse_int(sl, sw[4 + t], "dim");
    if (d < 0 || d > 5000) throw ParseError(sl.no, "dim out of range");
    dims.push_back(static_cast<std::size_t>(d));
  }
  std::vector<std::vector<Matrix>> mult;
  for (std::size_t t = 0; t + 1 < count; ++t) {
    std::vector<Matrix> blk;
    for (long k = 0; k < n; ++k) blk.emplace_back(f, dims[t + 1], dims[t]);
    mult.push_back(std::move(blk));
  }
  for (std::size_t t = 3; t < lines.size(); ++t) {
    const Line& l = lines[t];
    const auto colon = l.text.find(':');
    if (colon == std::string::npos) throw ParseError(l.no, "expected 'mult q=<q> k=<k> : rows'");
    const auto lw = words(l.text.substr(0, colon));
    if (lw.size() != 3 || lw[0] != "mult") throw ParseError(l.no, "expected 'mult q=<q> k=<k> : rows'");
    const long q = keyed(l, lw[1], "q"), k = keyed(l, lw[2], "k");
    if (q < lo || q >= hi) throw ParseError(l.no, "mult degree q=" + std::to_string(q) + " outside " + std::to_string(lo) + ".." + std::to_string(hi - 1));
    if (k < 1 || k > n) throw ParseError(l.no, "variable k=" + std::to_string(k) + " out of range");
    const std::size_t qi = static_cast<std::size_t>(q - lo);
    Matrix& a = mult[qi][static_cast<std::size_t>(k - 1)];
    std::vector<std::string> rows;
    {
      std::string body = l.text.substr(colon + 1);
      std::size_t start = 0;
      for (;;) {
        const auto semi = body.find(';', start);
        rows.push_back(trim(std::string_view(body).substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
    }
    if (a.rows() == 0 || a.cols() == 0) {
      if (!(rows.size() == 1 && rows[0].empty())) throw ParseError(l.no, "expected an empty body for a zero-size block");
      continue;
    }
    if (rows.size() != a.rows())
      throw ParseError(l.no, "expected " + std::to_string(a.rows()) + " rows, got " + std::to_string(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto entries = words(rows[i]);
      if (entries.size() != a.cols())
        throw ParseError(l.no, "row " + std::to_string(i + 1) + ": expected " + std::to_string(a.cols()) + " entries");
      for (std::size_t j = 0; j < entries.size(); ++j) a(i, j) = parse_scalar_at(f, l, entries[j]);
    }
  }
  return GradedModule(f, static_cast<int>(n), static_cast<int>(lo), std::move(dims), std::move(mult));
}

void write_graded_module(std::ostream& out, const GradedModule& m) {
  out << "graded-module v1\n";
  out << "field " << m.field().to_string() << "\n";
  out << "n=" << m.n() << " degrees " << m.q_min() << ".." << m.q_max() << " dims";
  for (auto d : m.dims()) out << " " << d;
  out << "\n";
  for (int q = m.q_min(); q < m.q_max(); ++q)
    for (int k = 0; k < m.n(); ++k) {
      const Matrix a = m.action(q, k);
      if (a.is_zero()) continue;
      out << "mult q=" << q << " k=" << (k + 1) << " :";
      for (std::size_t i = 0; i < a.rows(); ++i) {
        out << (i ? " ;" : "");
        for (std::size_t j = 0; j < a.cols(); ++j) out << " " << a(i, j).to_string();
      }
      out << "\n";
    }
}

PointSet read_pointset(std::istream& in) {
  const auto lines = read_lines(in);
  expect_header(lines, "pointset v1");
  const Field f = parse_field_line(lines, 1);
  if (lines.size() < 3) throw ParseError(0, "missing ambient line");
  const Line& al = lines[2];
  const auto aw = words(al.text);
  if (aw.size() != 2 || aw[0] != "ambient") throw ParseError(al.no, "expected 'ambient r=<r>'");
  const long r = keyed(al, aw[1], "r");
  if (r < 1 || r > 19) throw ParseError(al.no, "r out of range 1..19");
  std::vector<Vec> pts;
  std::vector<std::size_t> line_of;
  for (std::size_t t = 3; t < lines.size(); ++t) {
    const Line& l = lines[t];
    const auto pw = words(l.text);
    if (pw.empty() || pw[0] != "point") throw ParseError(l.no, "expected 'point <c_0> ... <c_r>'");
    if (pw.size() != static_cast<std::size_t>(r + 2))
      throw ParseError(l.no, "expected " + std::to_string(r + 1) + " coordinates");
    Vec p;
    for (std::size_t c = 1; c < pw.size(); ++c) p.push_back(parse_scalar_at(f, l, pw[c]));
    if (is_zero(p)) throw ParseError(l.no, "zero vector is not a point");
    std::size_t last = p.size();
    while (last-- > 0 && p[last].is_zero()) {
    }
    const Scalar inv = p[last].inverse();
    for (auto& c : p) c *= inv;
    for (std::size_t u = 0; u < pts.size(); ++u)
      if (pts[u] == p) throw ParseError(l.no, "duplicate point (same as line " + std::to_string(line_of[u]) + ")");
    pts.push_back(std::move(p));
    line_of.push_back(l.no);
  }
  if (pts.empty()) throw ParseError(0, "no points");
  return PointSet(f, static_cast<int>(r), std::move(pts));
}

void write_pointset(std::ostream& out, const PointSet& z) {
  out << "pointset v1\n";
  out << "field " << z.field().to_string() << "\n";
  out << "ambient r=" << z.r() << "\n";
  for (const auto& p : z.points()) {
    out << "point";
    for (const auto& c : p) out << " " << c.to_string();
    out << "\n";
  }
}

}  // namespace linsyz
