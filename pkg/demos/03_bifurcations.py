"""Non-planar bifurcations and n-furcations from end sections alone.

No vessel surface is computed anywhere: three (or n) positioned cross
sections are enough. Hermite curves between matched anchor points give the
saddle/apex scaffold, roto-translated ellipse quadrants form the butterfly
core, and each section is extruded onto its butterfly half.
"""

import pathlib

import numpy as np

from hexvessel import (
    DiscSampling,
    EndSpec,
    build_butterfly,
    build_disc_template,
    build_skeleton,
    mesh_junction,
    orient_sections,
    report,
    write_vtk,
)

out = pathlib.Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

template = build_disc_template()
sampling = DiscSampling(template.layout, 11)


def unit(v):
    v = np.asarray(v, float)
    return v / np.linalg.norm(v)


# --- a non-planar coronary-like bifurcation ---------------------------------
ends = [
    EndSpec(center=[0, -4, 0], tangent=[0, 1, 0], profile=1.2),          # inlet
    EndSpec(center=[3.0, 2.8, 0.9], tangent=unit([-3.0, -2.8, -0.9]), profile=1.0),
    EndSpec(center=[-2.6, 2.7, -1.3], tangent=unit([2.6, -2.7, 1.3]), profile=0.8),
]

# peek at the scaffold before meshing
sections = orient_sections(ends, template)
skeleton = build_skeleton(sections)
butterfly = build_butterfly(skeleton, template)
print(f"{skeleton.n_hermite} Hermite curves, {butterfly.n_quadrants} ellipse quadrants")
print("axis points:", np.round(skeleton.x_top, 3), np.round(skeleton.x_center, 3),
      np.round(skeleton.x_bottom, 3))
print("petal kinks (deg):", np.round(np.degrees(butterfly.petal_kink_angles()), 1))

mesh = mesh_junction(ends, template, sampling, layers=6)
print(report(mesh).summary("bifurcation"))
write_vtk(mesh, out / "bifurcation.vtk", cell_data={"scaled_jacobian": report(mesh).sj})

# --- five non-planar intersecting branches ----------------------------------
ends = []
for k in range(5):
    th = 2 * np.pi * k / 5
    c = np.array([4.2 * np.cos(th), 4.2 * np.sin(th), 0.8 * np.sin(3 * th)])
    ends.append(EndSpec(c, unit(-c * [1, 1, 0.3]), 0.8 + 0.15 * np.cos(th)))

mesh5 = mesh_junction(ends, template, sampling, layers=6)
print()
print(report(mesh5).summary("5-furcation"))
write_vtk(mesh5, out / "five_furcation.vtk", cell_data={"scaled_jacobian": report(mesh5).sj})

# linear instead of Hermite extrusion: same interfaces, straighter interior
mesh_lin = mesh_junction(ends, template, sampling, layers=6, mode="linear")
print(report(mesh_lin).summary("5-furcation/linear"))

print(f"\nwrote {out}/bifurcation.vtk and {out}/five_furcation.vtk")
