#include "rankone/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <array>
#include <stdexcept>
#include <vector>

namespace rankone::quad {
namespace {

struct StoredRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  GaussLegendreRule view;
};

StoredRule build(int order) {
  StoredRule rule;
  gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(order);
  for (int i = 0; i < order; ++i) {
    double x = 0.0;
    double w = 0.0;
    gsl_integration_glfixed_point(-1.0, 1.0, i, &x, &w, table);
    rule.nodes.push_back(x);
    rule.weights.push_back(w);
  }
  gsl_integration_glfixed_table_free(table);
  rule.view = {rule.nodes, rule.weights};
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
  static const std::array<StoredRule, 4> rules{build(8), build(16), build(32), build(64)};
  switch (order) {
    case 8:
      return rules[0].view;
    case 16:
      return rules[1].view;
    case 32:
      return rules[2].view;
    case 64:
      return rules[3].view;
    default:
      throw std::invalid_argument("gauss_legendre: unsupported order");
  }
}

}  // namespace rankone::quad
