#include "qma/ncpoly.hpp"

#include <algorithm>
#include <cctype>

#include "qma/errors.hpp"
#include "qma/scalar_io.hpp"

namespace qma {

NCPolynomial NCPolynomial::constant(Scalar c) {
    NCPolynomial p;
    if (!c.is_zero()) p.terms_.emplace(Word{}, std::move(c));
    return p;
}

NCPolynomial NCPolynomial::generator(GenIdx g) {
    NCPolynomial p;
    p.terms_.emplace(Word{g}, Scalar(1));
    return p;
}

NCPolynomial NCPolynomial::monomial(Word w, Scalar c) {
    NCPolynomial p;
    if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
    return p;
}

int NCPolynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.size());
}

bool NCPolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

void NCPolynomial::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPolynomial NCPolynomial::operator-() const {
    NCPolynomial p(*this);
    for (auto& [w, c] : p.terms_) c = -c;
    return p;
}

NCPolynomial NCPolynomial::operator+(const NCPolynomial& o) const {
    NCPolynomial p(*this);
    p += o;
    return p;
}

NCPolynomial NCPolynomial::operator-(const NCPolynomial& o) const {
    NCPolynomial p(*this);
    p -= o;
    return p;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPolynomial NCPolynomial::operator*(const NCPolynomial& o) const {
    NCPolynomial p;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            Word w;
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            p.add_term(w, ca * cb);
        }
    return p;
}

NCPolynomial NCPolynomial::scaled(const Scalar& c) const {
    NCPolynomial p;
    if (c.is_zero()) return p;
    for (const auto& [w, v] : terms_) p.terms_.emplace(w, v * c);
    return p;
}

NCPolynomial NCPolynomial::homogeneous_part(int d) const {
    NCPolynomial p;
    for (const auto& [w, c] : terms_)
        if (static_cast<int>(w.size()) == d) p.terms_.emplace(w, c);
    return p;
}

std::vector<int> NCPolynomial::degrees() const {
    std::vector<int> ds;
    for (const auto& [w, c] : terms_) {
        int d = static_cast<int>(w.size());
        if (ds.empty() || ds.back() != d) ds.push_back(d);
    }
    return ds;
}

NCPolynomial NCPolynomial::substituted(const std::vector<NCPolynomial>& images) const {
    NCPolynomial out;
    for (const auto& [w, c] : terms_) {
        NCPolynomial acc = NCPolynomial::constant(Scalar(1));
        for (GenIdx g : w) acc = acc * images.at(g);
        out += acc.scaled(c);
    }
    return out;
}

std::string NCPolynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string cs = scalar_to_string(c);
        bool negated = false;
        if (!cs.empty() && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
            cs.find(" - ") == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) s += "-";
            first = false;
        } else {
            s += negated ? " - " : " + ";
        }
        bool composite = cs.find(' ') != std::string::npos || cs.find('+') != std::string::npos ||
                         cs.find('-') != std::string::npos;
        std::string coeff = composite ? "(" + cs + ")" : cs;
        if (w.empty()) {
            s += coeff;
            continue;
        }
        if (coeff != "1") {
            s += coeff;
            s += "*";
        }
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) s += "*";
            s += names.at(w[i]);
        }
    }
    return s;
}

namespace {

class NCParser {
public:
    NCParser(const std::string& text, const std::vector<std::string>& names)
        : text_(text), names_(names) {}

    NCPolynomial parse() {
        NCPolynomial r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return r;
    }

private:
    NCPolynomial expr() {
        NCPolynomial r = term();
        for (;;) {
            skip_ws();
            if (accept('+')) r += term();
            else if (accept('-')) r -= term();
            else return r;
        }
    }

    NCPolynomial term() {
        NCPolynomial r = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) r = r * factor();
            else return r;
        }
    }

    NCPolynomial factor() {
        skip_ws();
        if (accept('-')) return -factor();
        NCPolynomial base = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            if (accept('-')) fail("negative powers are not defined in the free algebra");
            long e = integer_literal();
            NCPolynomial acc = NCPolynomial::constant(Scalar(1));
            for (long i = 0; i < e; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    NCPolynomial atom() {
        skip_ws();
        if (accept('(')) {
            NCPolynomial r = expr();
            skip_ws();
            expect(')');
            return r;
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            return NCPolynomial::constant(Scalar(Int(integer_literal())));
        std::string id = identifier();
        if (id.empty()) fail("expected generator, scalar or (");
        for (size_t g = 0; g < names_.size(); ++g)
            if (names_[g] == id) return NCPolynomial::generator(static_cast<GenIdx>(g));
        if (id == "q") return NCPolynomial::constant(Scalar::q());
        fail("unknown generator '" + id + "'");
        return NCPolynomial();
    }

    std::string identifier() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                text_[pos_] == '[' || text_[pos_] == ']'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    long integer_literal() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stol(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& why) {
        throw FormatError("nc parse error at position " + std::to_string(pos_) + ": " + why);
    }

    const std::string& text_;
    const std::vector<std::string>& names_;
    size_t pos_ = 0;
};

}  // namespace

NCPolynomial parse_ncpoly(const std::string& text, const std::vector<std::string>& names) {
    return NCParser(text, names).parse();
}

NCMatrix::NCMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
    data_.assign(static_cast<size_t>(rows * cols), NCPolynomial());
}

NCMatrix NCMatrix::promoted(const TensorOperator& op) {
    NCMatrix m(op.size(), op.size());
    for (long r = 0; r < op.size(); ++r)
        for (long c = 0; c < op.size(); ++c)
            if (!op.at(r, c).is_zero()) m.at(r, c) = NCPolynomial::constant(op.at(r, c));
    return m;
}

NCMatrix NCMatrix::identity(long n) {
    NCMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = NCPolynomial::constant(Scalar(1));
    return m;
}

NCMatrix NCMatrix::operator+(const NCMatrix& o) const {
    NCMatrix m(*this);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
    return m;
}

NCMatrix NCMatrix::operator-(const NCMatrix& o) const {
    NCMatrix m(*this);
    for (size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
    return m;
}

NCMatrix NCMatrix::operator*(const NCMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("nc matrix shape mismatch");
    NCMatrix m(rows_, o.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const NCPolynomial& a = at(i, k);
            if (a.is_zero()) continue;
            for (long j = 0; j < o.cols_; ++j) {
                const NCPolynomial& b = o.at(k, j);
                if (b.is_zero()) continue;
                m.at(i, j) += a * b;
            }
        }
    return m;
}

NCMatrix NCMatrix::scaled(const Scalar& c) const {
    NCMatrix m(*this);
    for (auto& e : m.data_) e = e.scaled(c);
    return m;
}

NCMatrix NCMatrix::scaled_nc(const NCPolynomial& c, bool left) const {
    NCMatrix m(*this);
    for (auto& e : m.data_) e = left ? c * e : e * c;
    return m;
}

bool NCMatrix::operator==(const NCMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

NCMatrix NCMatrix::tensor_identity_right(long size) const {
    NCMatrix m(rows_ * size, cols_ * size);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) {
            const NCPolynomial& e = at(i, j);
            if (e.is_zero()) continue;
            for (long x = 0; x < size; ++x) m.at(i * size + x, j * size + x) = e;
        }
    return m;
}

NCMatrix NCMatrix::tensor_identity_left(long size) const {
    NCMatrix m(rows_ * size, cols_ * size);
    for (long x = 0; x < size; ++x)
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) {
                const NCPolynomial& e = at(i, j);
                if (!e.is_zero()) m.at(x * rows_ + i, x * cols_ + j) = e;
            }
    return m;
}

NCPolynomial NCMatrix::trace() const {
    NCPolynomial t;
    for (long i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

NCPolynomial nc_weighted_trace(const NCMatrix& m, const TensorOperator& weight, int sites) {
    TensorOperator w = weight;
    for (int i = 1; i < sites; ++i) w = w.tensor(weight);
    NCPolynomial acc;
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) {
            if (w.at(i, j).is_zero()) continue;
            acc += m.at(j, i).scaled(w.at(i, j));
        }
    return acc;
}

NCMatrix nc_partial_trace(const NCMatrix& m, int dim, int sites, const std::vector<int>& traced_sites,
                          const std::optional<TensorOperator>& weight) {
    std::vector<bool> traced(static_cast<size_t>(sites), false);
    for (int s : traced_sites) {
        if (s < 1 || s > sites) throw DomainError("trace site out of range");
        traced[static_cast<size_t>(s - 1)] = true;
    }
    int kept = sites - static_cast<int>(traced_sites.size());
    long out_size = tensor_size(dim, kept);
    NCMatrix r(out_size, out_size);
    for (long row = 0; row < m.rows(); ++row) {
        std::vector<int> rd = decode_index(dim, sites, row);
        for (long col = 0; col < m.cols(); ++col) {
            const NCPolynomial& v = m.at(row, col);
            if (v.is_zero()) continue;
            std::vector<int> cd = decode_index(dim, sites, col);
            std::vector<int> kept_r, kept_c;
            Scalar factor(1);
            bool zero = false;
            for (int s = 0; s < sites; ++s) {
                if (!traced[static_cast<size_t>(s)]) {
                    kept_r.push_back(rd[static_cast<size_t>(s)]);
                    kept_c.push_back(cd[static_cast<size_t>(s)]);
                    continue;
                }
                if (weight) {
                    const Scalar& wv = weight->at(cd[static_cast<size_t>(s)], rd[static_cast<size_t>(s)]);
                    if (wv.is_zero()) {
                        zero = true;
                        break;
                    }
                    factor *= wv;
                } else if (rd[static_cast<size_t>(s)] != cd[static_cast<size_t>(s)]) {
                    zero = true;
                    break;
                }
            }
            if (zero) continue;
            r.at(encode_index(dim, kept_r), encode_index(dim, kept_c)) += v.scaled(factor);
        }
    }
    return r;
}

}  // namespace qma
