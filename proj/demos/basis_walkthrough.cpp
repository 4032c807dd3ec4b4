// Small tour: enumerate the admissible monomials for the rank-1 level-1
// module, then confirm degree by degree that they are independent and span.

#include <iostream>

#include <sympl/freudenthal.hpp>
#include <sympl/module.hpp>
#include <sympl/tables.hpp>

using namespace sympl;

int main() {
    const int ell = 1, level = 1, max_degree = 4;
    SymplecticAlgebra g(ell);
    GeneratorArray arr(ell, ArrayKind::Full);
    QuotientModel qm(g, level, max_degree);
    CharacterOracle oracle(ell, level, max_degree);

    auto pis = enumerate_partitions(arr, max_degree, level);
    std::vector<std::vector<ColoredPartition>> by_degree(max_degree + 1);
    for (const auto& pi : pis) by_degree[pi.degree()].push_back(pi);

    std::vector<GradedRow> rows;
    for (int n = 0; n <= max_degree; ++n) {
        if (n > 0) {
            std::cout << "degree " << n << " admissible monomials:\n";
            for (const auto& pi : by_degree[n])
                std::cout << "  " << render_partition(pi, arr.label_rank()) << "\n";
        }
        GradedRow row;
        row.degree = n;
        row.ambient = qm.ambient_dim(n);
        row.relation_rank = qm.relation_rank(n);
        row.quotient = qm.quotient_dim(n);
        row.admissible = n == 0 ? 1 : static_cast<long>(by_degree[n].size());
        row.monomial_rank = n == 0 ? 1 : qm.monomial_rank(n, by_degree[n]).rank;
        rows.push_back(row);
    }
    std::cout << "\n";
    render_graded(std::cout, OutputFormat::Text, rows);
    std::cout << "\nrecursion oracle says:";
    for (const Int& d : oracle.graded_dims()) std::cout << " " << to_string(d);
    std::cout << "\n";
    return 0;
}
