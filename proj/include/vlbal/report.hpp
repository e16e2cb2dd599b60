#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "vlbal/bigcount.hpp"
#include "vlbal/codec.hpp"

namespace vlbal {

struct RedundancyReport {
    std::string scheme;
    int n = 0;
    int q = 0;
    std::map<int, BigCount> gamma;
    // Real log2 |Gamma| versus the ceil(log2 |Gamma|) bits actually sent.
    double analytical_mean = 0.0;
    double operational_mean = 0.0;
    BoundTerms bound;
    double optimal = 0.0;
    std::optional<BigCount> bad_words;
};

// n - log2 C(n, n/2 + q).
double optimal_redundancy(int n, int q);

// Closed-form report; scheme must be A, B or CFullSpace.
RedundancyReport formula_report(SchemeId scheme, int n, int q);

struct Table1Row {
    int n = 0;
    double prior = 0.0;  // Scheme A at q = 0
    double scheme_b = 0.0;
    double scheme_c = 0.0;
    double optimal = 0.0;
};

struct Table2Row {
    int n = 0;
    int q = 0;
    double lower_bound = 0.0;  // (1 - D/2^n) log2 n
    double scheme_a = 0.0;
    double scheme_b = 0.0;
    double scheme_b_table = 0.0;  // bad term weighted by the length-n Scheme A count
    double optimal = 0.0;
};

std::vector<Table1Row> table1(const std::vector<int>& lengths);
std::vector<Table2Row> table2(const std::vector<int>& lengths, int q);

void write_csv(std::ostream& out, const std::vector<Table1Row>& rows);
void write_csv(std::ostream& out, const std::vector<Table2Row>& rows);

}  // namespace vlbal
