#include "parking/parking_function.hpp"
#include "parking/render.hpp"

#include <doctest.h>

#include <algorithm>
#include <regex>
#include <string>
#include <vector>

using namespace parking;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
    return count;
}

}  // namespace

TEST_CASE("Shi arrangement picture for n = 3") {
    const std::string svg = render_shi3_svg();
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count_of(svg, "<line") == 6);
    CHECK(count_of(svg, "<text") == 16);

    std::vector<std::string> labels;
    const std::regex text_re("<text[^>]*>([0-9]+)</text>");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), text_re); it != std::sregex_iterator(); ++it) {
        labels.push_back((*it)[1]);
    }
    std::vector<std::string> expected;
    for (const auto& x : enumerate_parking_functions(3)) {
        std::string s;
        for (int e : x.entries()) s += std::to_string(e);
        expected.push_back(s);
    }
    std::sort(labels.begin(), labels.end());
    CHECK(labels == expected);
}

TEST_CASE("rendering is deterministic") {
    CHECK(render_shi3_svg(1) == render_shi3_svg(1));
    CHECK(render_shi3_svg(1) == render_shi3_svg(4));
}
