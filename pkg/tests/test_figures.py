from pathcolor import ProtocolSpec, defects_vs_colors_dataset
from pathcolor.figures import render_defects_vs_colors

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def test_render_writes_png(tmp_path):
    rows = defects_vs_colors_dataset(
        8,
        [2, 3],
        [ProtocolSpec.parse("random"), ProtocolSpec.parse("phi|C")],
        trials=10,
        seed=0,
        mode="exact",
    )
    target = tmp_path / "curves.png"
    got = render_defects_vs_colors(rows, target)
    assert str(got) == str(target)
    assert target.read_bytes()[:8] == PNG_MAGIC
