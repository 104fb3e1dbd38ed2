#include "permcover/descriptor.hpp"

#include "permcover/cyclic_code.hpp"
#include "permcover/relabel.hpp"

namespace permcover {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

std::size_t code_length(const CodeDescriptor& code) {
  return std::visit(overloaded{
                        [](const ExplicitCode& c) { return c.length(); },
                        [](const CyclicFamily& c) { return c.n; },
                        [](const DihedralFamily& c) { return c.n; },
                        [](const ComposedCodeSpec& c) { return c.length(); },
                    },
                    code);
}

ExplicitCode materialize(const CodeDescriptor& code, std::size_t cap) {
  return std::visit(overloaded{
                        [](const ExplicitCode& c) { return c; },
                        [](const CyclicFamily& c) {
                          return c.conjugator ? gn_relabeled(c.n, *c.conjugator)
                                              : CyclicGroupCode(c.n).to_explicit();
                        },
                        [](const DihedralFamily& c) { return dihedral_dn(c.n); },
                        [cap](const ComposedCodeSpec& c) { return enumerate_code(c, cap); },
                    },
                    code);
}

std::string describe(const CodeDescriptor& code) {
  return std::visit(overloaded{
                        [](const ExplicitCode& c) {
                          return "explicit(" + std::to_string(c.length()) + ", " + std::to_string(c.size()) +
                                 " words)";
                        },
                        [](const CyclicFamily& c) {
                          return "G_" + std::to_string(c.n) + (c.conjugator ? "^" + format_cycles(*c.conjugator) : "");
                        },
                        [](const DihedralFamily& c) { return "D_" + std::to_string(c.n); },
                        [](const ComposedCodeSpec& c) {
                          return "C(" + std::to_string(c.length()) + "," + std::to_string(c.block_size()) + ")";
                        },
                    },
                    code);
}

}  // namespace permcover
