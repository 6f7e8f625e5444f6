#include "dap/scalar.hpp"

#include <cctype>
#include <utility>

namespace dap {
namespace {

std::uint64_t gf_norm(std::uint32_t p, long long v) {
  long long m = v % static_cast<long long>(p);
  if (m < 0) m += p;
  return static_cast<std::uint64_t>(m);
}

// Extended Euclid on (v, p), p prime, v != 0.
std::uint64_t gf_inverse(std::uint32_t p, std::uint64_t v) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(v);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

mpq_class canonical(mpq_class q) {
  q.canonicalize();
  return q;
}

[[noreturn]] void mismatch(const char* op) {
  fail(Errc::ModelMismatch, std::string("operands of '") + op + "' belong to different models");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ModelConfig ModelConfig::gf(std::uint32_t p) {
  if (!is_prime(p)) fail(Errc::NonPrimeModulus, "gf modulus " + std::to_string(p) + " is not prime");
  return {ModelKind::Gf, p};
}

std::string ModelConfig::name() const {
  switch (kind) {
    case ModelKind::Rational: return "rational";
    case ModelKind::Quaternion: return "quaternion";
    case ModelKind::Gf: return "gf(" + std::to_string(p) + ")";
  }
  return "?";
}

std::string ModelConfig::flag() const {
  return kind == ModelKind::Gf ? "gf:" + std::to_string(p) : name();
}

ModelConfig ModelConfig::parse_flag(std::string_view text) {
  if (text == "rational") return rational();
  if (text == "quaternion") return quaternion();
  if (text.rfind("gf:", 0) == 0) {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      fail(Errc::BadLiteral, "bad gf modulus in model '" + std::string(text) + "'");
    }
    return gf(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  fail(Errc::BadLiteral, "unknown model '" + std::string(text) + "' (want gf:<p>, rational, quaternion)");
}

Scalar Scalar::rational(mpq_class v) { return Scalar(Payload(canonical(std::move(v)))); }

Scalar Scalar::rational(long num, long den) {
  if (den == 0) fail(Errc::BadLiteral, "zero denominator in rational literal");
  return rational(mpq_class(num, den));
}

Scalar Scalar::gf(std::uint32_t p, long long v) {
  ModelConfig::gf(p);  // primality gate
  return Scalar(Payload(GfElem{p, gf_norm(p, v)}));
}

Scalar Scalar::quaternion(mpq_class w, mpq_class x, mpq_class y, mpq_class z) {
  return Scalar(Payload(Quat{canonical(std::move(w)), canonical(std::move(x)),
                             canonical(std::move(y)), canonical(std::move(z))}));
}

Scalar Scalar::zero(const ModelConfig& m) { return from_int(m, 0); }
Scalar Scalar::one(const ModelConfig& m) { return from_int(m, 1); }

Scalar Scalar::from_int(const ModelConfig& m, long long n) {
  switch (m.kind) {
    case ModelKind::Rational: return rational(mpq_class(static_cast<long>(n)));
    case ModelKind::Gf: return gf(m.p, n);
    case ModelKind::Quaternion:
      return quaternion(mpq_class(static_cast<long>(n)), 0, 0, 0);
  }
  fail(Errc::BadLiteral, "bad model");
}

ModelConfig Scalar::model() const {
  if (std::holds_alternative<mpq_class>(v_)) return ModelConfig::rational();
  if (std::holds_alternative<GfElem>(v_)) return {ModelKind::Gf, std::get<GfElem>(v_).p};
  return ModelConfig::quaternion();
}

bool Scalar::is_zero() const { return *this == zero(model()); }
bool Scalar::is_one() const { return *this == one(model()); }

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return Scalar(Payload(mpq_class(-*q)));
  if (const auto* g = std::get_if<GfElem>(&v_)) {
    return Scalar(Payload(GfElem{g->p, g->v == 0 ? 0 : g->p - g->v}));
  }
  const auto& h = std::get<Quat>(v_);
  return Scalar(Payload(Quat{-h.w, -h.x, -h.y, -h.z}));
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::ZeroInverse, "zero has no multiplicative inverse");
  if (const auto* q = std::get_if<mpq_class>(&v_)) return Scalar(Payload(mpq_class(1 / *q)));
  if (const auto* g = std::get_if<GfElem>(&v_)) {
    return Scalar(Payload(GfElem{g->p, gf_inverse(g->p, g->v)}));
  }
  // q^{-1} = conj(q) / |q|^2; |q|^2 > 0 over the rationals.
  const auto& h = std::get<Quat>(v_);
  mpq_class n = h.w * h.w + h.x * h.x + h.y * h.y + h.z * h.z;
  return Scalar(Payload(Quat{canonical(h.w / n), canonical(-h.x / n), canonical(-h.y / n),
                             canonical(-h.z / n)}));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) mismatch("+");
  if (const auto* qa = std::get_if<mpq_class>(&a.v_)) {
    return Scalar(Scalar::Payload(mpq_class(*qa + std::get<mpq_class>(b.v_))));
  }
  if (const auto* ga = std::get_if<Scalar::GfElem>(&a.v_)) {
    const auto& gb = std::get<Scalar::GfElem>(b.v_);
    if (ga->p != gb.p) mismatch("+");
    return Scalar(Scalar::Payload(Scalar::GfElem{ga->p, (ga->v + gb.v) % ga->p}));
  }
  const auto& ha = std::get<Scalar::Quat>(a.v_);
  const auto& hb = std::get<Scalar::Quat>(b.v_);
  return Scalar(Scalar::Payload(
      Scalar::Quat{ha.w + hb.w, ha.x + hb.x, ha.y + hb.y, ha.z + hb.z}));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) mismatch("*");
  if (const auto* qa = std::get_if<mpq_class>(&a.v_)) {
    return Scalar(Scalar::Payload(mpq_class(*qa * std::get<mpq_class>(b.v_))));
  }
  if (const auto* ga = std::get_if<Scalar::GfElem>(&a.v_)) {
    const auto& gb = std::get<Scalar::GfElem>(b.v_);
    if (ga->p != gb.p) mismatch("*");
    return Scalar(Scalar::Payload(Scalar::GfElem{ga->p, (ga->v * gb.v) % ga->p}));
  }
  // Hamilton product; order matters.
  const auto& p = std::get<Scalar::Quat>(a.v_);
  const auto& q = std::get<Scalar::Quat>(b.v_);
  return Scalar(Scalar::Payload(Scalar::Quat{
      p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
      p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
      p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
      p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w}));
}

bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

Scalar nat_multiple(unsigned n, const Scalar& a) {
  if (n < 1) fail(Errc::BadNatural, "natural multiple requires n >= 1");
  Scalar acc = a;
  for (unsigned i = 1; i < n; ++i) acc = acc + a;
  return acc;
}

namespace {

// One additive term of a literal: [sign] [digits [/ digits]] [i|j|k].
struct Term {
  mpq_class coeff;
  int unit;  // 0 = real part, 1..3 = i, j, k
};

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  std::vector<Term> run() {
    std::vector<Term> terms;
    if (text_.empty()) err("empty scalar literal");
    while (pos_ < text_.size()) {
      terms.push_back(term(terms.empty()));
    }
    return terms;
  }

 private:
  [[noreturn]] void err(const std::string& why) { fail(Errc::BadLiteral, why); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  mpz_class digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) err("expected digits in scalar literal '" + text_ + "'");
    return mpz_class(text_.substr(start, pos_ - start));
  }

  Term term(bool first) {
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      if (peek() == '-') sign = -1;
      ++pos_;
    } else if (!first) {
      err("expected '+' or '-' between terms in '" + text_ + "'");
    }
    mpq_class coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = digits();
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        den = digits();
        if (den == 0) err("zero denominator in '" + text_ + "'");
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      have_coeff = true;
    }
    int unit = 0;
    if (peek() == 'i' || peek() == 'j' || peek() == 'k') {
      unit = peek() == 'i' ? 1 : peek() == 'j' ? 2 : 3;
      ++pos_;
    } else if (!have_coeff) {
      err("expected number or unit in scalar literal '" + text_ + "'");
    }
    if (sign < 0) coeff = -coeff;
    return {coeff, unit};
  }

  std::string text_;
  std::size_t pos_ = 0;
};

std::string rat_str(const mpq_class& q) { return q.get_str(); }

// Appends "±coeff·unit" in canonical spelling; unit coefficient 1 elides.
void append_term(std::string& out, const mpq_class& c, const char* unit) {
  if (c == 0) return;
  mpq_class a = c < 0 ? mpq_class(-c) : c;
  if (out.empty()) {
    if (c < 0) out += '-';
  } else {
    out += c < 0 ? '-' : '+';
  }
  if (*unit == '\0' || a != 1) out += rat_str(a);
  out += unit;
}

}  // namespace

Scalar Scalar::parse(const ModelConfig& m, std::string_view text) {
  std::vector<Term> terms = LiteralParser(text).run();
  if (m.kind == ModelKind::Quaternion) {
    mpq_class c[4];
    for (const Term& t : terms) c[t.unit] += t.coeff;
    return quaternion(c[0], c[1], c[2], c[3]);
  }
  mpq_class acc;
  for (const Term& t : terms) {
    if (t.unit != 0) {
      fail(Errc::BadLiteral,
           "quaternion units are not valid in " + m.name() + " literal '" + std::string(text) + "'");
    }
    acc += t.coeff;
  }
  if (m.kind == ModelKind::Rational) return rational(acc);
  // gf literals are integers
  if (acc.get_den() != 1) {
    fail(Errc::BadLiteral, "gf literal must be an integer, got '" + std::string(text) + "'");
  }
  if (!acc.get_num().fits_slong_p()) fail(Errc::BadLiteral, "gf literal out of range");
  return gf(m.p, acc.get_num().get_si());
}

std::string Scalar::str() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return rat_str(*q);
  if (const auto* g = std::get_if<GfElem>(&v_)) return std::to_string(g->v);
  const auto& h = std::get<Quat>(v_);
  std::string out;
  append_term(out, h.w, "");
  append_term(out, h.x, "i");
  append_term(out, h.y, "j");
  append_term(out, h.z, "k");
  return out.empty() ? "0" : out;
}

double Scalar::approx() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return q->get_d();
  if (const auto* g = std::get_if<GfElem>(&v_)) return static_cast<double>(g->v);
  return std::get<Quat>(v_).w.get_d();
}

}  // namespace dap
