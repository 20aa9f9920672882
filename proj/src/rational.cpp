#include "meansq/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace meansq {

double to_double(const Rational& x) { return x.convert_to<double>(); }

std::string to_fraction_string(const Rational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) {
        s += "/";
        s += denominator(x).str();
    }
    return s;
}

bool is_integer(const Rational& x) { return denominator(x) == 1; }

BigInt to_integer_exact(const Rational& x, const char* what) {
    if (!is_integer(x))
        throw std::logic_error(std::string(what) + ": non-integer exact value " +
                               to_fraction_string(x));
    return numerator(x);
}

BigInt binomial(unsigned n, unsigned r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    BigInt c = 1;
    for (unsigned i = 0; i < r; ++i) {
        c *= n - i;
        c /= i + 1;  // exact: C(n,i+1) is an integer
    }
    return c;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table{Rational(1)};  // B_0

}  // namespace

Rational bernoulli(unsigned q) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    while (bernoulli_table.size() <= q) {
        unsigned m = static_cast<unsigned>(bernoulli_table.size());
        // C(m+1,m) B_m = -sum_{j<m} C(m+1,j) B_j
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * bernoulli_table[j];
        bernoulli_table.push_back(-acc / Rational(m + 1));
    }
    return bernoulli_table[q];
}

}  // namespace meansq
