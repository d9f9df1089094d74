#pragma once

// Reads bar annotations back out of an emitted SVG with an XML parser.

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace sus::testing {

struct ProbedBar {
  std::string label;
  std::size_t count = 0;
  double height = 0.0;
};

struct ProbedChart {
  std::string title;
  std::vector<ProbedBar> bars;
};

/// Throws boost::property_tree::xml_parser_error on malformed XML.
inline ProbedChart probe_svg(const std::string& svg) {
  namespace pt = boost::property_tree;
  pt::ptree doc;
  std::istringstream in(svg);
  pt::read_xml(in, doc);

  std::size_t roots = 0;
  for (const auto& [name, child] : doc)
    if (name != "<xmlcomment>") ++roots;
  if (roots != 1 || doc.count("svg") != 1) {
    throw std::runtime_error("expected a single <svg> root");
  }

  ProbedChart chart;
  const auto& svg_node = doc.get_child("svg");
  chart.title = svg_node.get<std::string>("title", "");

  std::function<void(const pt::ptree&)> walk = [&](const pt::ptree& node) {
    for (const auto& [name, child] : node) {
      if (name == "rect" && child.get<std::string>("<xmlattr>.class", "") == "bar") {
        ProbedBar bar;
        bar.label = child.get<std::string>("<xmlattr>.data-label");
        bar.count = child.get<std::size_t>("<xmlattr>.data-count");
        bar.height = child.get<double>("<xmlattr>.height");
        chart.bars.push_back(bar);
      } else if (name != "<xmlattr>") {
        walk(child);
      }
    }
  };
  walk(svg_node);
  return chart;
}

}  // namespace sus::testing
