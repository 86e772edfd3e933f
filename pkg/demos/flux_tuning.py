"""Tune the readout resonator with flux and look at junction IV curves."""

import numpy as np

from jpotile import (
    PHI0,
    JunctionParams,
    ResonatorParams,
    SquidParams,
    calibrate_resonator,
    flux_sweep,
    johnson_noise_amplitude,
    pump_frequency,
    resonance_frequency,
    rsj_iv_curve,
    squid_inductance,
)

squid = SquidParams(l1=7.5e-12, l2=7.5e-12, i_c1=80e-6, i_c2=80e-6)
target = 2 * np.pi * 7.5e9
omega_r = 2 * np.pi * 5e9

l_r = calibrate_resonator(target, omega_r, squid)
res = ResonatorParams(omega_r, l_r, 5e-13)
f0 = resonance_frequency(res, squid, 0.0) / (2 * np.pi)
print(f"calibrated l_r = {l_r*1e12:.3f} pH, zero-flux f0 = {f0/1e9:.6f} GHz")
print(f"pump at {pump_frequency(target)/(2*np.pi)/1e9:.1f} GHz")

print("\ninductance vs flux:")
for frac in (0.0, 0.1, 0.2, 1.0 / 3.0, 0.45):
    l = squid_inductance(squid, frac * PHI0)
    print(f"  phi/phi0 = {frac:.3f}  L = {l*1e12:7.3f} pH")

# half a flux quantum is rejected rather than returned as a huge number
try:
    squid_inductance(squid, PHI0 / 2)
except Exception as exc:
    print(f"  phi/phi0 = 0.500  -> {type(exc).__name__}: {exc}")

print("\ndc current sweep, current_to_flux = 0.4 phi0 per unit current:")
points = flux_sweep(res, squid, 0.4 * PHI0, np.linspace(0, 2, 9))
for p in points:
    mark = " clipped" if p.clipped else ""
    f = "      nan" if p.clipped else f"{p.omega0/(2*np.pi)/1e9:9.4f}"
    print(f"  i_dc = {p.i_dc:4.2f}  f0 = {f} GHz{mark}")

junction = JunctionParams(i_c=2e-6, r_shunt=15.0)
i = np.linspace(-6e-6, 6e-6, 13)
print(f"\nRSJ IV at T=0 (i_c = {junction.i_c*1e6:.0f} uA):")
_, v0 = rsj_iv_curve(junction, 0.0, i)
for ii, vv in zip(i, v0):
    print(f"  I = {ii*1e6:+5.1f} uA  V = {vv*1e6:+8.3f} uV")

sigma = johnson_noise_amplitude(junction.r_shunt, 4.2)
print(f"\nJohnson noise amplitude at 4.2 K over 15 ohm: {sigma:.3e}")
_, v_warm = rsj_iv_curve(junction, 4.2, i, seed=7)
print("warm curve deviation from backbone (uV):", np.round((v_warm - v0) * 1e6, 4))
