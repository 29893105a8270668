"""Coordinates of proper polynomials and the branch chosen for synthesis."""
from mlimage import classify, poly, proper_decompose
from mlimage.decompose import pattern_pairs, tag_path
from mlimage.freepoly import PROP1_TEXT

for text in ["[[x4,x1],[x3,x2]]", PROP1_TEXT, "[x1,x2]*[x3,x4] - [x3,x4]*[x1,x2]"]:
    f = poly(text)
    d = proper_decompose(f)
    print(text)
    print("  coordinates:", d.to_json())
    print("  pattern pairs:", [(p.pattern, str(p.alpha), str(p.beta)) for p in pattern_pairs(d)])
    print("  branch:", tag_path(classify(f)))

f = poly("[x1,x2]*x3*x4")
print("\n[x1,x2]*x3*x4 reduces as", " -> ".join(tag_path(classify(f))))
