// Library usage: summarize a plain-text blog post given on stdin and print
// the title terms, the matrices, and the selected sentences.
//
//   ./summarize_text < tests/data/mini.txt

#include <iostream>
#include <iterator>
#include <string>

#include "blogsum/blogsum.hpp"

int main() {
  const std::string raw{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  try {
    const auto doc = blogsum::parse_document(raw, blogsum::InputFormat::Plain, {{}, "<stdin>"});
    blogsum::SummaryOptions options;
    options.length = blogsum::TopK{3};
    const auto analysis = blogsum::analyze(doc, options);

    std::cout << "title terms:";
    for (const auto& term : analysis.title_terms) std::cout << ' ' << term.str();
    std::cout << "\n\n" << blogsum::dump_matrices(analysis.tsm, analysis.pfm) << '\n';

    for (const auto& s : blogsum::summarize(analysis, options).selected)
      std::cout << s.score.str() << '\t' << s.sentence.raw_text << '\n';
  } catch (const blogsum::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
}
