#ifndef SYZ_FIELD_HPP
#define SYZ_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace syz {

// Coefficient field: either Q (exact rationals) or GF(p) for an odd prime
// p < 2^31. The default working prime matches common computer-algebra
// practice.
struct Field {
    enum class Tag { Q, GFp };
    Tag tag = Tag::GFp;
    std::uint32_t p = 32003;

    static Field rationals() { return Field{Tag::Q, 0}; }
    static Field prime(std::uint32_t p) {
        if (p < 3 || p % 2 == 0) throw std::invalid_argument("field prime must be odd and >= 3");
        return Field{Tag::GFp, p};
    }
    bool is_q() const { return tag == Tag::Q; }
    bool operator==(const Field& o) const { return tag == o.tag && (is_q() || p == o.p); }
    bool operator!=(const Field& o) const { return !(*this == o); }
    std::string name() const { return is_q() ? "Q" : "GF(" + std::to_string(p) + ")"; }
};

// A field element. Rationals are kept in lowest terms with positive
// denominator (mpq_class canonicalization); prime-field residues in [0, p).
class Scalar {
public:
    Scalar() : field_(Field::prime(32003)), r_(0) {}
    Scalar(const Field& f) : field_(f), r_(0) {}

    static Scalar from_int(const Field& f, long v) {
        Scalar s(f);
        if (f.is_q()) {
            s.q_ = mpq_class(v);
        } else {
            long m = v % (long)f.p;
            if (m < 0) m += f.p;
            s.r_ = (std::uint32_t)m;
        }
        return s;
    }
    static Scalar from_mpq(const Field& f, const mpq_class& v) {
        if (!f.is_q()) throw std::invalid_argument("from_mpq on prime field");
        Scalar s(f);
        s.q_ = v;
        s.q_.canonicalize();
        return s;
    }
    static Scalar zero(const Field& f) { return from_int(f, 0); }
    static Scalar one(const Field& f) { return from_int(f, 1); }

    const Field& field() const { return field_; }
    bool is_zero() const { return field_.is_q() ? q_ == 0 : r_ == 0; }
    bool is_one() const { return field_.is_q() ? q_ == 1 : r_ == 1; }

    Scalar operator+(const Scalar& o) const {
        check(o);
        Scalar s(field_);
        if (field_.is_q()) s.q_ = q_ + o.q_;
        else s.r_ = (std::uint32_t)(((std::uint64_t)r_ + o.r_) % field_.p);
        return s;
    }
    Scalar operator-(const Scalar& o) const {
        check(o);
        Scalar s(field_);
        if (field_.is_q()) s.q_ = q_ - o.q_;
        else s.r_ = (std::uint32_t)(((std::uint64_t)r_ + field_.p - o.r_) % field_.p);
        return s;
    }
    Scalar operator*(const Scalar& o) const {
        check(o);
        Scalar s(field_);
        if (field_.is_q()) s.q_ = q_ * o.q_;
        else s.r_ = (std::uint32_t)(((std::uint64_t)r_ * o.r_) % field_.p);
        return s;
    }
    Scalar operator-() const {
        Scalar s(field_);
        if (field_.is_q()) s.q_ = -q_;
        else s.r_ = r_ == 0 ? 0 : field_.p - r_;
        return s;
    }
    Scalar inv() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Scalar s(field_);
        if (field_.is_q()) {
            s.q_ = 1 / q_;
        } else {
            // extended Euclid
            std::int64_t a = r_, m = field_.p, x0 = 0, x1 = 1;
            std::int64_t b = m;
            while (a > 1) {
                std::int64_t q = a / b;
                std::int64_t t = b; b = a - q * b; a = t;
                t = x0; x0 = x1 - q * x0; x1 = t;
            }
            if (x1 < 0) x1 += m;
            s.r_ = (std::uint32_t)x1;
        }
        return s;
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
    bool operator==(const Scalar& o) const {
        check(o);
        return field_.is_q() ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const mpq_class& rational() const {
        if (!field_.is_q()) throw std::logic_error("not a rational");
        return q_;
    }
    std::uint32_t residue() const {
        if (field_.is_q()) throw std::logic_error("not a residue");
        return r_;
    }
    std::string str() const {
        return field_.is_q() ? q_.get_str() : std::to_string(r_);
    }

private:
    void check(const Scalar& o) const {
        if (field_ != o.field_) throw std::invalid_argument("mixed field tags");
    }
    Field field_;
    mpq_class q_;
    std::uint32_t r_;
};

// Reads the SYZFORGE_FIELD environment variable ("Q" or a prime); falls
// back to GF(32003).
Field default_field();

} // namespace syz

#endif
