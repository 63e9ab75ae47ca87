// Times the OpenMP kernels against their serial reference implementations:
// the brute-force graph census and the sparse series product.

#include <omp.h>

#include <cstdio>

#include "CLI11.hpp"
#include "compgf/enumeration.hpp"
#include "compgf/oracle.hpp"

using namespace compgf;

int main(int argc, char** argv) {
  CLI::App app{"Parallel-vs-serial timing for the census and series kernels"};
  int census_order = 7;
  int series_order = 9;
  app.add_option("--order", census_order, "Brute-force census order")
      ->check(CLI::Range(1, kOracleHardCap))
      ->capture_default_str();
  app.add_option("--series-order", series_order,
                 "Truncation order for the series product")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::printf("threads available: %d\n\n", omp_get_max_threads());
  WeightVector w = trivial_weights();

  double t0 = omp_get_wtime();
  CountTable parallel_census = oracle_table(
      census_order, GraphPredicate::bipartite, w, WeightMode::per_component,
      kOracleHardCap);
  double t1 = omp_get_wtime();
  CountTable serial_census = oracle_table_serial(
      census_order, GraphPredicate::bipartite, w, WeightMode::per_component,
      kOracleHardCap);
  double t2 = omp_get_wtime();
  bool census_equal = parallel_census == serial_census;
  std::printf("bipartite census to order %d\n", census_order);
  std::printf("  parallel: %8.3fs\n", t1 - t0);
  std::printf("  serial:   %8.3fs  (%.2fx)\n", t2 - t1,
              (t2 - t1) / (t1 - t0));
  std::printf("  results identical: %s\n\n", census_equal ? "yes" : "NO");

  Series tagged = egf_of_counts(connected_bipartite_series(series_order).table,
                                series_order, true);
  Series aux = exp_series(tagged);
  std::printf("series square at order %d (%zu terms)\n", series_order,
              aux.terms().size());
  double t3 = omp_get_wtime();
  Series parallel_product = mul(aux, aux);
  double t4 = omp_get_wtime();
  Series serial_product = mul_serial(aux, aux);
  double t5 = omp_get_wtime();
  bool product_equal = parallel_product == serial_product;
  std::printf("  parallel: %8.3fs\n", t4 - t3);
  std::printf("  serial:   %8.3fs  (%.2fx)\n", t5 - t4, (t5 - t4) / (t4 - t3));
  std::printf("  results identical: %s\n", product_equal ? "yes" : "NO");

  return census_equal && product_equal ? 0 : 1;
}
