#pragma once

#include <memory>
#include <string>

namespace fracstab {

// Tiny total expression grammar over {t, y, yd}:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | number | 't' | 'y' | 'yd'
//           | ('sin'|'cos'|'tanh') '(' expr ')' | '(' expr ')'
// No division and no unbounded functions, so any expression with bounded
// inputs stays bounded and Lipschitz on compacta.
class Expression {
 public:
  static Expression parse(const std::string& text);

  double eval(double t, double y, double yd) const;
  // evaluation for expressions of t alone; throws if y or yd is referenced
  double eval_t(double t) const;

  bool uses_state() const { return uses_y_ || uses_yd_; }
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
  bool uses_y_ = false, uses_yd_ = false;
};

}  // namespace fracstab
