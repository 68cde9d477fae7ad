#pragma once

// The general genus-two free energy in canonical coordinates, as a term
// table (see terms.hpp for the notation). Each record is summed over all
// its index letters, skipping tuples with a vanishing denominator.

namespace frob::g2 {

inline constexpr const char* kF2Table = R"TABLE(
@section F2
1/1152 * u4[i]/(u1[i]^2*h[i]^2)
-7/1920 * u2[i]*u3[i]/(u1[i]^3*h[i]^2)
1/360 * u2[i]^3/(u1[i]^4*h[i]^2)
1/40 * V[i,j]^2*u3[i]/(D[i,j]*u1[i]*h[i]^2)
1/640 * V[i,j]*h[j]*u1[j]*u3[i]/(D[i,j]*u1[i]^2*h[i]^3)
-19/2880 * V[i,j]*u3[i]*h[j]/(D[i,j]*u1[i]*h[i]^3)
1/1152 * V[i,j]*u3[i]*h[i]/(D[i,j]*u1[j]*h[j]^3)
7/40 * V[i,j]^2*V[i,k]^2*u2[i]/(D[i,j]*D[i,k]*h[i]^2)
-1/240 * V[i,j]^2*V[i,k]*u2[i]*h[k]*(32*u1[i]-7*u1[k])/(D[i,j]*D[i,k]*u1[i]*h[i]^3)
1/40 * V[i,j]*V[j,k]^2*u2[i]*h[i]/(D[i,j]*D[j,k]*h[j]^3)
-1/48 * V[i,j]*V[j,k]^2*u1[j]*u2[i]/(D[i,j]*D[j,k]*u1[i]*h[i]*h[j])
-3/64 * V[i,j]^2*u2[i]/(D[i,j]^2*h[i]^2)
-11/480 * V[i,j]^2*u2[i]^2/(D[i,j]*u1[i]^2*h[i]^2)
29/5760 * V[i,j]*V[j,k]*u2[i]*h[i]*h[k]*(u1[k]-2*u1[j])/(D[i,j]*D[j,k]*u1[j]*h[j]^4)
1/384 * V[i,j]*V[i,k]*u2[i]*h[k]*(u1[i]-u1[k])/(D[i,j]*D[i,k]*u1[j]*h[j]^3)
1/1920 * V[i,j]*V[i,k]*u2[i]*h[j]*h[k]*(54*u1[i]^2-25*u1[i]*u1[j]-u1[j]*u1[k])/(D[i,j]*D[i,k]*u1[i]^2*h[i]^4)
1/576 * V[i,j]*V[j,k]*u2[i]*h[k]*(2*u1[j]-u1[k])/(D[i,j]*D[j,k]*u1[i]*h[i]*h[j]^2)
-1/5760 * V[i,j]*V[j,k]*u1[k]*u2[i]*h[k]*(27*u1[i]+u1[k])/(D[j,k]*D[i,k]*u1[i]^2*h[i]^3)
-19/1920 * V[i,j]*V[j,k]*u2[i]*h[k]/(D[i,j]*D[i,k]*h[i]^3)
1/5760 * V[i,j]*V[j,k]*h[k]*(27*u1[i]*u1[k]-u1[j]^2+2*u1[j]*u1[k])*u2[i]/(D[i,j]*D[j,k]*u1[i]^2*h[i]^3)
1/288 * V[i,j]*V[j,k]*u2[i]*h[i]/(D[j,k]*D[i,k]*h[k]^3)
1/384 * V[i,j]*V[j,k]*u1[i]*u2[i]*h[i]/(D[i,j]*D[i,k]*u1[k]*h[k]^3)
-1/576 * V[i,j]*V[j,k]*u1[k]*u2[i]/(D[j,k]*D[i,k]*u1[i]*h[i]*h[k])
-1/384 * V[i,k]*V[j,k]*u1[k]*u2[i]*h[i]/(D[i,k]*D[j,k]*u1[j]*h[j]^3)
1/1920 * V[i,j]*u2[i]^2*h[j]*(11*u1[i]-5*u1[j])/(D[i,j]*u1[i]^3*h[i]^3)
-1/5760 * V[i,j]*u2[i]*u2[j]*h[j]/(D[i,j]*u1[i]^2*h[i]^3)
1/5760 * V[i,j]*u2[i]*h[j]*(57*u1[i]^2-27*u1[i]*u1[j]-u1[j]^2)/(D[i,j]^2*u1[i]^2*h[i]^3)
1/1152 * V[i,j]*u2[i]*h[i]*(4*u1[j]-3*u1[i])/(D[i,j]^2*u1[j]*h[j]^3)
-1/576 * V[i,j]*u1[j]*u2[i]/(D[i,j]^2*u1[i]*h[i]*h[j])
-1/1152 * V[i,j]*u2[i]*u2[j]/(D[i,j]*u1[i]*u1[j]*h[i]*h[j])
1/10 * V[i,j]^2*V[i,k]^2*V[i,l]^2*u1[i]^2/(D[i,j]*D[i,k]*D[i,l]*h[i]^2)
-7/20 * V[i,j]^2*V[i,k]^2*V[i,l]*h[l]*u1[i]^2/(D[i,j]*D[i,k]*D[i,l]*h[i]^3)
7/40 * V[i,j]^2*V[i,k]^2*V[i,l]*h[l]*u1[i]*u1[l]/(D[i,j]*D[i,k]*D[i,l]*h[i]^3)
-1/8 * V[i,j]^2*V[i,k]*V[k,l]^2*u1[i]*u1[k]/(D[i,j]*D[i,k]*D[k,l]*h[i]*h[k])
1/40 * V[i,j]^2*V[i,k]*V[k,l]*h[l]*(u1[k]^2-3*u1[i]^2-2*u1[k]*u1[l])/(D[i,j]*D[i,k]*D[k,l]*h[i]^3)
3/40 * V[i,j]^2*V[i,k]*V[k,l]*u1[i]*u1[l]*h[l]/(D[i,j]*D[i,k]*D[i,l]*h[i]^3)
1/40 * V[i,j]^2*V[i,k]*V[k,l]*h[l]*(3*u1[i]^2+u1[l]^2)/(D[i,j]*D[k,l]*D[i,l]*h[i]^3)
1/48 * V[i,j]^2*V[i,k]*V[k,l]*h[l]*u1[i]*(2*u1[k]-u1[l])/(D[i,j]*D[i,k]*D[k,l]*h[i]*h[k]^2)
5/96 * V[i,j]^2*V[i,k]*V[i,l]*h[k]*h[l]*(4*u1[i]^2-4*u1[i]*u1[k]+u1[k]*u1[l])/(D[i,j]*D[i,k]*D[i,l]*h[i]^4)
-83/480 * V[i,j]^2*V[i,k]^2*u1[i]^2/(D[i,j]*D[i,k]^2*h[i]^2)
1/144 * V[i,j]*V[i,k]*V[j,l]*V[k,l]*u1[i]^2/(D[i,k]*D[j,l]*D[i,l]*h[i]^2)
-1/144 * V[i,j]*V[i,k]*V[j,l]*V[k,l]*u1[i]^2/(D[i,j]*D[i,k]*D[k,l]*h[i]^2)
-1/48 * V[i,j]^2*V[i,k]*V[k,l]*u1[i]*u1[l]/(D[i,j]*D[k,l]*D[i,l]*h[i]*h[l])
29/1920 * V[i,j]*V[i,k]*V[j,l]*h[k]*h[l]*(u1[k]*u1[l]-u1[i]*u1[k]+2*u1[i]^2-2*u1[i]*u1[l])/(D[i,j]*D[i,k]*D[i,l]*h[i]^4)
-29/5760 * V[i,j]*V[i,k]*V[j,l]*h[k]*h[l]*u1[j]*(2*u1[k]*u1[l]+2*u1[i]*u1[j]-u1[j]*u1[k]-4*u1[i]*u1[l])/(D[i,j]*D[i,k]*D[j,l]*h[i]^4*u1[i])
-1/1152 * V[i,j]*V[i,k]*V[j,l]*h[k]*h[l]*(4*u1[i]*u1[j]-4*u1[i]*u1[l]+u1[k]*u1[l])/(D[i,j]*D[i,k]*D[j,l]*h[i]^2*h[j]^2)
-1/384 * V[i,j]*V[i,k]*V[j,l]*h[l]*(u1[i]*u1[j]^2-2*u1[j]*u1[i]*u1[l])/(D[i,j]*D[i,k]*D[j,l]*u1[k]*h[k]^3)
-29/5760 * V[i,j]*V[i,k]*V[j,l]*h[k]*h[l]*u1[l]^2*(2*u1[i]-u1[k])/(D[i,k]*D[j,l]*D[i,l]*h[i]^4*u1[i])
1/1152 * V[i,j]*V[i,k]*V[j,l]*h[l]*u1[i]^2*(u1[i]-3*u1[l])/(D[i,j]*D[i,k]*D[i,l]*u1[k]*h[k]^3)
-1/384 * V[i,j]*V[i,k]*V[j,l]*h[l]*u1[i]*u1[l]^2/(D[i,k]*D[j,l]*D[i,l]*u1[k]*h[k]^3)
-1/1152 * V[i,j]*V[i,k]*V[j,l]*h[l]*u1[j]^2*(3*u1[l]-2*u1[j])/(D[i,j]*D[j,l]*D[j,k]*u1[k]*h[k]^3)
-1/288 * V[i,j]*V[i,k]*V[j,l]*h[l]*u1[j]*(u1[j]-2*u1[l])/(D[i,k]*D[j,l]*D[j,k]*h[k]^3)
1/576 * V[i,j]*V[i,k]*V[j,l]*h[l]*u1[k]*(2*u1[k]-3*u1[l])/(D[i,k]*D[j,k]*D[k,l]*h[k]^3)
-1/1152 * V[i,j]*V[i,k]*V[j,l]*h[l]*u1[l]^3/(D[j,l]*D[k,l]*D[i,l]*u1[k]*h[k]^3)
1/288 * V[i,j]*V[i,k]*V[j,l]*h[l]*u1[l]^2/(D[i,k]*D[j,l]*D[k,l]*h[k]^3)
-1/576 * V[i,j]*V[i,k]*V[j,l]*h[k]*u1[l]*(u1[k]-2*u1[i])/(D[i,k]*D[j,l]*D[i,l]*h[i]^2*h[l])
-7/1440 * V[i,j]*V[i,k]*V[i,l]*h[j]*h[k]*h[l]*(8*u1[i]^3-12*u1[i]^2*u1[j]-u1[j]*u1[k]*u1[l]+6*u1[i]*u1[j]*u1[k])/(D[i,j]*D[i,k]*D[i,l]*h[i]^5*u1[i])
-1/1152 * V[i,j]*V[i,k]*V[j,l]*u1[k]*u1[l]/(D[i,k]*D[j,l]*D[k,l]*h[k]*h[l])
-29/1152 * V[i,j]*V[i,k]*V[j,k]*u1[i]^2/(D[i,j]*D[i,k]^2*h[i]^2)
-53/1920 * V[i,j]^2*V[i,k]*h[k]*u1[i]*u1[k]/(D[i,j]*D[i,k]*D[j,k]*h[i]^3)
-1/320 * V[i,j]^2*V[i,k]*h[k]*(3*u1[i]^2-8*u1[k]^2)/(D[i,j]*D[i,k]^2*h[i]^3)
-V[i,j]^2*V[i,k]*u1[i]*h[k]/(D[i,j]^2*D[j,k]*h[i]^3)*(27/640*u1[k]-233/2880*u1[i])
-V[i,j]^2*V[i,k]*u1[i]*h[k]/(D[i,k]^2*D[j,k]*h[i]^3)*(233/2880*u1[i]-67/960*u1[k])
1/1152 * V[i,j]^2*V[i,k]*h[i]*u1[i]^3/(D[i,j]*D[i,k]^2*u1[k]*h[k]^3)
-1/576 * V[i,j]^2*V[i,k]*h[i]*u1[i]^3/(D[i,j]^2*D[i,k]*u1[k]*h[k]^3)
-1/48 * V[i,j]^2*V[i,k]*u1[i]*u1[k]/(D[i,j]*D[i,k]^2*h[i]*h[k])
233/1440 * V[i,j]^3*h[j]*u1[i]^2/(D[i,j]^3*h[i]^3)
-43/384 * V[i,j]^3*h[j]*u1[i]*u1[j]/(D[i,j]^3*h[i]^3)
-1/12 * V[i,j]^3*u1[i]*u1[j]/(D[i,j]^3*h[i]*h[j])
29/5760 * V[i,j]*V[i,k]*h[j]*h[k]*(3*u1[i]*u1[k]+3*u1[j]*u1[k]+6*u1[i]*u1[j]-6*u1[i]^2-2*u1[j]^2)/(D[i,j]^2*D[i,k]*h[i]^4)
29/5760 * V[i,j]*V[i,k]*u1[j]*u1[k]*h[j]*h[k]*(u1[k]-6*u1[i])/(D[i,j]*D[i,k]^2*u1[i]*h[i]^4)
1/576 * V[i,j]*V[i,k]*u1[j]*h[k]*(2*u1[i]-u1[k])/(D[i,j]^2*D[i,k]*h[i]^2*h[j])
1/1152 * V[i,j]*V[i,k]*D[i,j]*h[k]*(3*u1[i]^2*u1[k]-3*u1[i]*u1[k]^2+u1[k]^3-u1[i]^3)/(D[i,k]^2*D[j,k]^2*u1[j]*h[j]^3)
1/576 * V[i,j]*V[i,k]*D[i,k]*h[k]*(-u1[i]^3+3*u1[j]^2*u1[k]-4*u1[i]*u1[j]*u1[k]+2*u1[i]^2*u1[j]-2*u1[j]^3)/(D[i,j]^2*D[j,k]^2*u1[j]*h[j]^3)
1/384 * V[i,j]*V[i,k]*h[k]*(-u1[i]*u1[k]^2+u1[i]^3-6*u1[j]^2*u1[k])/(D[i,j]*D[j,k]^2*u1[j]*h[j]^3)
1/384 * V[i,j]*V[i,k]*h[k]*u1[i]^2*u1[k]/(D[i,j]^2*D[j,k]*u1[j]*h[j]^3)
1/288 * V[i,j]*V[i,k]*h[k]*(4*u1[i]*u1[k]+u1[k]^2-2*u1[i]^2+3*u1[j]^2)/(D[i,j]*D[j,k]^2*h[j]^3)
-1/576 * V[i,j]*V[i,k]*u1[j]*u1[k]/(D[i,k]*D[j,k]^2*h[j]*h[k])
1/384 * V[i,j]*V[i,k]*h[k]*(2*u1[i]*u1[k]^2-u1[i]^2*u1[k]-u1[k]^3)/(D[i,k]*D[j,k]^2*u1[j]*h[j]^3)
1/288 * V[i,j]*V[i,k]*h[k]*(u1[k]^2-2*u1[i]*u1[k]+u1[i]^2)/(D[i,k]*D[j,k]^2*h[j]^3)
1/1152 * V[i,j]^2*u1[i]*(37*u1[i]*u1[j]*h[j]^2+10*u1[i]*u1[j]*h[i]^2-3*u1[i]^2*h[i]^2+11*u1[j]^2*h[j]^2)/(D[i,j]^3*u1[j]*h[i]^2*h[j]^2)
-1/576 * V[i,j]*h[j]*(4*u1[i]^3+4*u1[i]*u1[j]^2-6*u1[i]^2*u1[j]-u1[j]^3)/(D[i,j]^3*u1[i]*h[i]^3)
1/576 * V[i,j]*u1[i]*u1[j]/(D[i,j]^3*h[i]*h[j])
)TABLE";

}  // namespace frob::g2
