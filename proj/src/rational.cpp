#include "plbord/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "plbord/error.hpp"

namespace plbord {

std::string rat_to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    std::string num = c.get_num().get_str();
    if (c.get_den() == 1) return num;
    return num + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) fail("parse", "empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpz_class num, den;
        if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0 ||
            den == 0)
            fail("parse", "bad rational literal: " + s);
        Rat q(num, den);
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        mpz_class num;
        if (num.set_str(s, 10) != 0) fail("parse", "bad rational literal: " + s);
        return Rat(num);
    }
    std::string intpart = s.substr(0, dot);
    std::string fracpart = s.substr(dot + 1);
    bool neg = !intpart.empty() && intpart[0] == '-';
    if (neg) intpart = intpart.substr(1);
    if (intpart.empty()) intpart = "0";
    for (char ch : intpart)
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail("parse", "bad rational literal: " + s);
    for (char ch : fracpart)
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail("parse", "bad rational literal: " + s);
    mpz_class num;
    num.set_str(intpart + fracpart, 10);
    mpz_class den = 1;
    for (std::size_t i = 0; i < fracpart.size(); ++i) den *= 10;
    Rat q(num, den);
    if (neg) q = -q;
    q.canonicalize();
    return q;
}

double rat_to_double(const Rat& q) { return q.get_d(); }

mpz_class round_half_up(const Rat& q) {
    // floor(q + 1/2)
    Rat shifted = q + Rat(1, 2);
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
    return out;
}

mpz_class isqrt_floor(const mpz_class& z) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
    return r;
}

Rat sqrt_upper_bound(const Rat& q, unsigned bits) {
    if (q < 0) fail("domain", "sqrt of negative rational");
    mpz_class scale = 1;
    scale <<= 2 * bits;
    mpz_class scaled_num = q.get_num() * scale;
    // ceil(sqrt(num*scale/den)) / 2^bits >= sqrt(q)
    mpz_class t = scaled_num * q.get_den();
    mpz_class root = isqrt_floor(t);
    if (root * root < t) root += 1;
    Rat out(root, q.get_den());
    out /= Rat(mpz_class(1) << bits);
    out.canonicalize();
    return out;
}

Rat sqrt_lower_bound(const Rat& q, unsigned bits) {
    if (q < 0) fail("domain", "sqrt of negative rational");
    mpz_class scale = 1;
    scale <<= 2 * bits;
    mpz_class t = q.get_num() * scale * q.get_den();
    mpz_class root = isqrt_floor(t);
    Rat out(root, q.get_den());
    out /= Rat(mpz_class(1) << bits);
    out.canonicalize();
    return out;
}

int compare_sqrt(const Rat& a, const Rat& r) {
    if (a < 0) fail("domain", "sqrt of negative rational");
    if (r < 0) return 1;  // sqrt(a) >= 0 > r unless both zero
    int c = cmp(a, r * r);
    return c;
}

bool sqrt_leq_sqrt_plus(const Rat& a, const Rat& b, const Rat& c) {
    // sqrt(a) <= sqrt(b) + c
    if (c < 0) {
        // sqrt(a) + |c| <= sqrt(b): both sides nonnegative, square once:
        // a + 2|c|sqrt(a) + c^2 <= b  <=>  2|c|sqrt(a) <= b - a - c^2
        Rat rhs = b - a - c * c;
        if (rhs < 0) return false;
        Rat lhs_sq = 4 * c * c * a;
        return lhs_sq <= rhs * rhs;
    }
    // a <= b + 2c*sqrt(b) + c^2  <=>  a - b - c^2 <= 2c*sqrt(b)
    Rat lhs = a - b - c * c;
    if (lhs <= 0) return true;
    return lhs * lhs <= 4 * c * c * b;
}

std::size_t hash_rat(const Rat& q) {
    auto hash_mpz = [](const mpz_class& z) {
        std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) + 0x9e3779b97f4a7c15ULL;
        const mp_limb_t* limbs = mpz_limbs_read(z.get_mpz_t());
        std::size_t n = mpz_size(z.get_mpz_t());
        for (std::size_t i = 0; i < n; ++i) {
            h ^= static_cast<std::size_t>(limbs[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    };
    return hash_combine(hash_mpz(q.get_num()), hash_mpz(q.get_den()));
}

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace plbord
