#include "cdo/figures.hpp"

#include <sstream>

namespace cdo {

namespace {

// Edge list lines "u v len"; nodes are created on first sight, root is "z".
Graph build(const std::string& spec, Length denominator = 1) {
  Graph g;
  g.set_denominator(denominator);
  g.add_node("z");
  std::istringstream in(spec);
  std::string u, v;
  Length len;
  while (in >> u >> v >> len) {
    if (g.find(u) < 0) g.add_node(u);
    if (g.find(v) < 0) g.add_node(v);
    g.add_edge(g.at(u), g.at(v), len);
  }
  g.set_root(g.at("z"));
  return g;
}

FigureInstance triangle() { return {build("z a 1 a b 1 b z 1"), {}, {}}; }

FigureInstance square() { return {build("z a 1 a b 1 b c 1 c z 1"), {}, {}}; }

FigureInstance k4() { return {build("z a 1 z b 1 z c 1 a b 1 b c 1 a c 1"), {}, {}}; }

FigureInstance lca() {
  return {build("z a 1 a b 1 b c 1 c d 1 d z 1 "
                "a e 1 e f 1 f g 1 g h 1 h b 1 "
                "e j 1 j f 1 g k 1 k h 1 c i 1 i d 1"),
          {"zabcdz", "zaefghbcdz", "zaejfghbcdz", "zaefgkhbcdz", "zabcidz"},
          {"C0", "C1", "C2", "C3", "C4"}};
}

// Lengths are doubled so that the 1.5 edge stays integral.
FigureInstance def() {
  FigureInstance f;
  f.g = build(
      "z a 0 a e 0 e h 0 h n 0 n z 0 "
      "a b 0 b c 0 c d 0 b e 0 h i 0 i j 0 j k 0 n o 0 o r 0 "
      "c f 2 f i 2 i l 2 l o 2 f g 2 d g 6 g j 6 j m 6 m r 4 l m 10 d k 6 k r 3",
      2);
  f.cycles = {"zaehnz",      "zabehnz",     "zabcfihnz",   "zabcdgfihnz", "zabcfgjihnz",
              "zabcdkjihnz", "zaehilonz",   "zaehilmronz", "zaehijmronz", "zaehijkronz"};
  f.labels = {"C0", "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9"};
  return f;
}

FigureInstance interval() {
  FigureInstance f;
  std::string s;
  // Father path z b0 .. b14 z.
  s += "z b0 1 ";
  for (int i = 0; i < 14; ++i) s += "b" + std::to_string(i) + " b" + std::to_string(i + 1) + " 1 ";
  s += "b14 z 1 ";
  s += "b2 p1 1 p1 p2 1 p2 p3 1 p3 b3 1 ";
  s += "p3 p4 1 p4 q 1 q b5 1 ";
  s += "b4 q 1 q p5 1 p5 r 1 r b6 1 ";
  s += "r p6 1 p6 p7 1 p7 b7 1 ";
  s += "b8 s1 1 s1 s2 1 s2 b9 1 ";
  s += "s2 s3 1 s3 b10 1 ";
  s += "s3 s4 1 s4 b11 1 ";
  s += "s1 t1 1 t1 t2 1 t2 s4 1 ";
  s += "t2 t3 1 t3 t4 1 t4 b13 1 ";
  s += "s4 s5 1 s5 b12 1 ";
  s += "s5 t4 1 ";
  f.g = build(s);
  auto base = [](int from, int to) {
    std::string r;
    for (int i = from; i <= to; ++i) r += " b" + std::to_string(i);
    return r;
  };
  auto cyc = [&](int a, const std::string& mid, int b) {
    return "z" + base(0, a) + " " + mid + base(b, 14) + " z";
  };
  f.cycles = {
      "z" + base(0, 14) + " z",
      cyc(2, "p1 p2 p3", 3),
      cyc(3, "p3 p4 q", 5),
      cyc(4, "q p5 r", 6),
      cyc(6, "r p6 p7", 7),
      cyc(8, "s1 s2", 9),
      cyc(9, "s2 s3", 10),
      cyc(10, "s3 s4", 11),
      cyc(8, "s1 t1 t2 s4", 11),
      cyc(11, "s4 t2 t3 t4", 13),
      cyc(11, "s4 s5", 12),
      cyc(12, "s5 t4", 13),
  };
  f.labels = {"C0", "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C'", "C''", "C8", "C9"};
  return f;
}

FigureInstance bigex() {
  FigureInstance f;
  f.g = build(
      "z a 1 a b 1 b c 1 c d 1 d e 1 e f 1 f g 1 g h 1 h i 1 i z 1 "
      "a j 1 j b 1 j k 1 k l 1 l m 1 m n 1 n c 1 k o 1 o l 1 o p 1 p m 1 p n 1 "
      "d q 3 q v 3 v i 3 v u 1 u h 2 q r 1 r e 1 r s 1 s f 1 s t 1 t g 1 t u 1");
  f.cycles = {"zabcdefghiz",      "zajbcdefghiz",     "zabjklmncdefghiz",
              "zabjkolmncdefghiz", "zabjklopmncdefghiz", "zabjklmpncdefghiz",
              "zabcdqviz",        "zabcdqvuhiz",      "zabcdqrefghiz",
              "zabcdersfghiz",    "zabcdefstghiz",    "zabcdefgtuhiz"};
  f.labels = {"C0", "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11"};
  return f;
}

FigureInstance inncross() {
  return {build("z k 1 k g 1 g l 1 l h 1 h z 1 "
                "k a 1 a x 1 x b 1 b h 1 x c 1 c l 1 g d 1 d x 1"),
          {}, {}};
}

FigureInstance cr() {
  return {build("z k 1 k g 1 g l 1 l h 1 h z 1 "
                "k p 3 p x 1 x l 1 g x 1 x q 1 q h 2"),
          {}, {}};
}

FigureInstance gdef() {
  return {build("z a 1 a b 1 b c 1 c z 1 a c 1 "
                "z d 1 d e 1 e z 1 "
                "z f 1 f g 1 g h 1 h z 1 f h 2"),
          {}, {}};
}

FigureInstance two_squares() { return {build("z a 1 a b 1 b z 1 z c 1 c d 1 d z 1"), {}, {}}; }

}  // namespace

FigureInstance figure(const std::string& name) {
  if (name == "triangle") return triangle();
  if (name == "square") return square();
  if (name == "k4") return k4();
  if (name == "lcafig") return lca();
  if (name == "deffig") return def();
  if (name == "intervalfig") return interval();
  if (name == "bigexfig") return bigex();
  if (name == "inncrossfig") return inncross();
  if (name == "crfig") return cr();
  if (name == "gdeffig") return gdef();
  if (name == "twosquares") return two_squares();
  throw Error(ErrorCode::InputError, "unknown figure " + name);
}

std::vector<std::string> figure_names() {
  return {"triangle", "square", "k4", "lcafig", "deffig", "intervalfig",
          "bigexfig", "inncrossfig", "crfig", "gdeffig", "twosquares"};
}

}  // namespace cdo
