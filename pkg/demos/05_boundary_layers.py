"""Boundary-layer grading of the cross-sectional grid.

Wall-shear-stress computations want cells packed against the lumen wall.
The radial control map f_a(r) = r + a (1-r) r accumulates the template's
interior control points towards the rim (stronger with larger a), the
outer-patch radial polygons are re-straightened, and the graded
parameterization carries over to every swept or harmonically mapped
section for free.
"""

import pathlib

import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from hexvessel import (
    BranchGeometry,
    BSplineCurve,
    DiscSampling,
    KnotVector,
    ScalarSpline,
    apply_boundary_layer,
    boundary_layer_profile,
    build_disc_template,
    catalogue_sections,
    report,
    sweep_branch,
    write_vtk,
)

out = pathlib.Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

base = build_disc_template()
sampling = DiscSampling(base.layout, 11)

alphas = (0.0, 0.5, 0.8, 0.95)
fig, axes = plt.subplots(1, len(alphas), figsize=(4 * len(alphas), 4))
for ax, alpha in zip(axes, alphas):
    template = base if alpha == 0 else apply_boundary_layer(base, alpha)
    pts = sampling.evaluate(template.net)
    for q in pts[sampling.quads]:
        ax.fill(q[:, 0], q[:, 1], facecolor="none", edgecolor="tab:blue", linewidth=0.4)
    ax.set_title(f"alpha = {alpha}")
    ax.set_aspect("equal")
fig.tight_layout()
fig.savefig(out / "boundary_layers.png", dpi=130)

# the control-function identities that make the map a valid grading
for alpha in (0.2, 0.5, 0.8):
    f = boundary_layer_profile(alpha)
    print(f"alpha={alpha}: f(0)={f(0.0):.0f}  f(1)={f(1.0):.0f}  f'(1)={1 - alpha:.2f}")

# wall spacing vs quality trade-off on the benchmark cylinder
kv = KnotVector.uniform(3, 8)
g = kv.greville()
cyl = BranchGeometry(
    BSplineCurve(kv, np.stack([0 * g, 0 * g, 50 * g], axis=1)),
    ScalarSpline(KnotVector.uniform(3, 6), np.full(6, 1.25)),
)
print(f"\n{'alpha':>6s} {'wall cell [mm]':>15s} {'SJ_min':>7s} {'NES_max':>8s}")
for alpha in alphas:
    template = base if alpha == 0 else apply_boundary_layer(base, alpha)
    # radial sample stations along the +x ray of the east patch
    ray = template.layout.patch_values(template.net, 1, sampling.params, [0.5])[:, 0, :]
    gaps = np.diff(np.linalg.norm(ray, axis=1)) * 1.25
    mesh = sweep_branch(catalogue_sections(cyl, 50, template), sampling)
    rep = report(mesh)
    print(f"{alpha:6.2f} {gaps[-1]:15.4f} {rep.sj_min:7.3f} {rep.nes_max:8.3f}")
    if alpha == 0.5:
        write_vtk(mesh, out / "cylinder_bl.vtk", cell_data={"scaled_jacobian": rep.sj})

print(f"\nwrote {out}/boundary_layers.png and {out}/cylinder_bl.vtk")
