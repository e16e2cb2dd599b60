#include "vlbal/report.hpp"

#include <cmath>
#include <iomanip>

#include "vlbal/errors.hpp"
#include "vlbal/scheme_a.hpp"
#include "vlbal/scheme_b.hpp"
#include "vlbal/scheme_c.hpp"

namespace vlbal {
namespace {

std::map<int, BigCount> nonzero(const std::vector<BigCount>& dist) {
    std::map<int, BigCount> out;
    for (std::size_t i = 1; i < dist.size(); ++i) {
        if (dist[i] != 0) out.emplace(static_cast<int>(i), dist[i]);
    }
    return out;
}

}  // namespace

double optimal_redundancy(int n, int q) {
    check_length_and_q(static_cast<std::size_t>(n), q);
    if (n <= 4096) return n - log2_big(binomial(n, n / 2 + q));
    return n - log_binomial(n, n / 2 + q) / std::log(2.0);
}

RedundancyReport formula_report(SchemeId scheme, int n, int q) {
    RedundancyReport r;
    r.scheme = std::string(to_string(scheme));
    r.n = n;
    r.q = q;
    switch (scheme) {
        case SchemeId::A:
            r.gamma = nonzero(gamma_distribution_a(n, q));
            r.bound = rho_a_terms(n, q, LogConvention::Real);
            r.operational_mean = rho_a_terms(n, q, LogConvention::Ceil).total();
            r.bad_words = count_bad(n, q);
            break;
        case SchemeId::B:
            r.gamma = nonzero(gamma_distribution_b(n, q));
            r.bound = rho_b_terms(n, q, LogConvention::Real);
            r.operational_mean = rho_b_terms(n, q, LogConvention::Ceil).total();
            r.bad_words = count_bad_b(n, q);
            break;
        case SchemeId::CFullSpace: {
            if (q != 0) throw DomainError("full-space cyclic balancing is defined for q = 0");
            const auto dist = gamma_distribution_fullspace(n);
            r.gamma = nonzero(dist);
            r.bound.fixed_bits = 1.0;
            r.operational_mean = 1.0;
            for (std::size_t i = 2; i < dist.size(); ++i) {
                const double share = ratio_pow2(dist[i] * i, n - 1);
                r.bound.good_term += share * std::log2(static_cast<double>(i));
                r.operational_mean += share * std::ceil(std::log2(static_cast<double>(i)));
            }
            break;
        }
        case SchemeId::CCode:
            throw DomainError("code-specific reports come from the trellis or the oracle");
    }
    r.analytical_mean = r.bound.total();
    r.optimal = optimal_redundancy(n, q);
    return r;
}

std::vector<Table1Row> table1(const std::vector<int>& lengths) {
    std::vector<Table1Row> rows;
    for (int n : lengths) rows.push_back({n, rho_a_bound(n, 0), rho_b(n, 0), rho_c_fullspace(n), optimal_redundancy(n, 0)});
    return rows;
}

std::vector<Table2Row> table2(const std::vector<int>& lengths, int q) {
    std::vector<Table2Row> rows;
    for (int n : lengths) {
        Table2Row r;
        r.n = n;
        r.q = q;
        r.lower_bound = (1.0 - ratio_pow2(count_bad(n, q), n)) * std::log2(static_cast<double>(n));
        r.scheme_a = rho_a_bound(n, q);
        r.scheme_b = rho_b(n, q);
        r.scheme_b_table = rho_b_table_convention(n, q);
        r.optimal = optimal_redundancy(n, q);
        rows.push_back(r);
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<Table1Row>& rows) {
    out << "n,prior_scheme_a_q0,scheme_b,scheme_c_fullspace,optimal,convention\n";
    out << std::fixed << std::setprecision(4);
    for (const auto& r : rows) {
        out << r.n << ',' << r.prior << ',' << r.scheme_b << ',' << r.scheme_c << ',' << r.optimal << ",analytical\n";
    }
    out << std::defaultfloat;
}

void write_csv(std::ostream& out, const std::vector<Table2Row>& rows) {
    out << "n,q,lower_bound,scheme_a,scheme_b,scheme_b_table_convention,optimal,convention\n";
    out << std::fixed << std::setprecision(4);
    for (const auto& r : rows) {
        out << r.n << ',' << r.q << ',' << r.lower_bound << ',' << r.scheme_a << ',' << r.scheme_b << ','
            << r.scheme_b_table << ',' << r.optimal << ",analytical\n";
    }
    out << std::defaultfloat;
}

}  // namespace vlbal
