#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parahoric {

// Exact scalar type of the whole library. No floating point anywhere:
// floors and ceilings of pairings are discontinuous in the inputs.
using Rat = mpq_class;

// A point of the apartment, coordinates in the fundamental-coweight basis.
using QVec = std::vector<Rat>;

// Integer vectors (root coordinates in the simple basis, coroot coordinates
// in the simple-coroot basis, marks, ...).
using IVec = std::vector<long>;

// Bad user input: inadmissible type, malformed rational, facet index out of
// range, precondition violations of the documented operations.
class validation_error : public std::runtime_error {
public:
    validation_error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// A state the mathematics forbids. Reaching one of these is a bug.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& message) : std::logic_error(message) {}
};

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// mpq_class(num, den) does not reduce; every fraction built from raw parts
// goes through here.
inline Rat frac(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline long to_long(const Rat& q) {
    if (!is_integer(q)) throw internal_error("to_long on non-integer rational " + q.get_str());
    if (!q.get_num().fits_slong_p()) throw internal_error("rational out of long range");
    return q.get_num().get_si();
}

inline mpz_class floor_z(const Rat& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline mpz_class ceil_z(const Rat& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline long floor_long(const Rat& q) {
    mpz_class r = floor_z(q);
    if (!r.fits_slong_p()) throw internal_error("floor out of long range");
    return r.get_si();
}

inline long ceil_long(const Rat& q) {
    mpz_class r = ceil_z(q);
    if (!r.fits_slong_p()) throw internal_error("ceil out of long range");
    return r.get_si();
}

// Canonical string form, "p" or "p/q" with q > 1 and gcd(p,q) = 1.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Accepts "p" and "p/q" with optional sign; canonicalizes. Anything else is
// a validation error (code "bad_rational").
Rat parse_rational(std::string_view s);

std::string qvec_str(const QVec& v);

}  // namespace parahoric
