#pragma once

// The genus-two G-function
//   G2 = sum_i G_i u_i'' + sum_{i != j} G_ij u_j'^3 / u_i'
//        + 1/2 sum_{i,j} P_ij u_i' u_j' + sum_i Q_i u_i'^2
// as a term table (see terms.hpp). Section names: G, Gij, P, Q.

namespace frob::g2 {

inline constexpr const char* kG2Table = R"TABLE(
@section G
@outer i
@factor u2[i]
dx(h[i])*H[i]/(60*u1[i]*h[i]^3)
-3*d[i](h[i])*H[i]/(40*h[i]^3)
19*d[i](h[i])^2/(2880*h[i]^4)
-7*d[i](h[i])*dx(h[i])/(5760*u1[i]*h[i]^4)
g[i,k]*H[i]/(120*h[i]*h[k])
g[i,k]*H[k]/(120*h[i]*h[k])*(7+u1[k]/u1[i])
-g[i,k]/(5760*h[i]^2*h[k])*(4*d[i](h[i])+dx(h[i])/u1[i])
-g[i,k]*d[k](h[k])/(h[i]*h[k]^2)*(u1[k]/(1152*u1[i])+7/2880)
g[i,k]*d[k](h[k])/(384*h[i]^3)
-d[k](g[i,k])*h[k]/(384*h[i]^3)
d[i](g[i,k])*h[k]*u1[k]/(1920*u1[i]*h[i]^3)
d[i](g[i,k])/(2880*h[i]*h[k])
dx(g[i,k])/(5760*u1[i]*h[i]*h[k])
d[k](g[i,k])/(h[i]*h[k])*(u1[k]/(2880*u1[i])+7/2880)
g[i,k]*h[i]*d[k](h[k])/(2880*h[k]^4)
-g[i,k]^2/h[i]^2*(7*u1[k]/(1152*u1[i])+19/720)
g[i,k]^2/(1440*h[k]^2)
-h[i]*g[i,l]*g[k,l]/(2880*h[k]*h[l]^2)
-u1[k]*h[k]*g[i,l]*g[k,l]/(1920*u1[i]*h[i]*h[l]^2)

@section Gij
@outer i j
@distinct i j
@factor u1[j]^3/u1[i]
-g[i,j]^2*H[j]/(120*h[j]^2)
g[i,j]^3/(480*h[i]*h[j])
-g[i,j]/5760*(d[i](g[i,j])/h[i]^2+d[j](g[i,j])/h[j]^2)
g[i,j]^2/5760*(d[i](h[i])/h[i]^3+3*d[j](h[j])/h[j]^3)
g[i,j]*g[i,k]*g[j,k]/(5760*h[k]^2)
g[i,j]^2/(5760*h[k])*(g[j,k]/h[j]-g[i,k]/h[i])

@section P
@outer i j
@factor 1/2*u1[i]*u1[j]
-2*g[i,j]*H[i]*H[j]/(5*h[i]*h[j])
g[i,j]*d[j](h[j])*H[i]/(20*h[i]*h[j]^2)
g[i,j]*h[i]*d[j](h[j])*H[j]/(20*h[j]^4)
-19*g[i,j]^2*H[j]/(30*h[j]^2)
-d[i](g[i,j])*H[j]/(60*h[i]*h[j])
41*g[i,j]^3/(240*h[i]*h[j])
-41*g[i,j]*d[i](g[i,j])/(1440*h[i]^2)
d[i](g[i,j])*d[j](h[j])/(1440*h[i]*h[j]^2)
79*g[i,j]^2*d[j](h[j])/(1440*h[j]^3)
-g[i,j]*d[i](h[i])*d[j](h[j])/(720*h[i]^2*h[j]^2)
-g[i,j]*h[i]*d[j](h[j])^2/(288*h[j]^5)
g[i,j]*g[i,k]*H[j]/(60*h[j]*h[k])
-g[i,k]*g[j,k]*h[i]*h[j]*H[k]/(30*h[k]^4)
-g[i,j]*g[j,k]*h[i]*H[j]/(60*h[j]^2*h[k])
g[i,k]*g[j,k]*h[i]*H[j]/(60*h[j]*h[k]^2)
-7*g[i,j]*g[j,k]*h[i]*H[k]/(60*h[j]^2*h[k])
-g[i,j]*g[i,k]*d[j](h[j])/(720*h[j]^2*h[k])
g[i,j]*g[j,k]*h[i]*d[j](h[j])/(240*h[j]^3*h[k])
-g[i,k]*g[j,k]*h[i]*d[j](h[j])/(1440*h[j]^2*h[k]^2)
g[i,j]*g[j,k]*h[i]*d[k](h[k])/(720*h[k]^4)
g[i,k]*g[j,k]*h[i]*h[j]*d[k](h[k])/(288*h[k]^5)
g[j,k]*d[i](g[i,j])/(1440*h[i]*h[k])
-h[j]*h[k]*g[i,j]*d[i](g[i,k])/(360*h[i]^4)
-h[j]*(3*g[i,k]*d[i](g[i,j])+2*g[i,j]*d[i](g[i,k]))/(1440*h[i]^2*h[k])
-7*h[j]*g[i,j]*d[k](g[i,k]/h[k])/(1440*h[i]^2)
-h[i]*h[j]*g[i,k]*d[k](g[j,k])/(480*h[k]^4)
g[i,j]^2*g[j,k]/(120*h[j]*h[k])
7*h[i]*g[i,j]*g[j,k]^2/(160*h[j]^3)
11*g[i,j]*g[i,k]*g[j,k]/(2880*h[k]^2)
h[j]*g[i,k]^2*g[j,k]/(96*h[k]^3)
h[i]*h[j]*g[i,l]*g[j,l]/(720*h[k]*h[l]^2)*(g[k,l]/h[l]-g[j,k]/(2*h[j]))
-h[i]*g[i,j]*g[j,l]*g[k,l]/(720*h[k]*h[l]^2)

@section Q
@outer i
@factor u1[i]^2
4*H[i]^3/(5*h[i]^2)
-7*d[i](h[i])*H[i]^2/(10*h[i]^3)
7*d[i](h[i])^2*H[i]/(48*h[i]^4)
-d[i](h[i])^3/(120*h[i]^5)
7*g[i,k]*H[i]*H[k]/(10*h[i]*h[k])
-g[i,k]*d[i](h[i])*H[i]/(120*h[i]^2*h[k])
7*d[k](g[i,k]/h[k])*H[i]/(240*h[i])
-7*g[i,k]*d[i](h[i])*H[k]/(80*h[i]^2*h[k])
g[i,k]*H[k]/(576*D[i,k]*h[i]*h[k])
(2*H[i]+7*H[k])*d[i](g[i,k])/(240*h[i]*h[k])
g[i,k]*h[k]*H[i]/(576*D[i,k]*h[i]^3)
-31*g[i,k]^2*H[i]/(144*h[i]^2)
g[i,k]*d[i](h[i])^2/(720*h[i]^3*h[k])
253*g[i,k]^2*d[i](h[i])/(5760*h[i]^3)
-d[i](g[i,k])*d[i](h[i])/(960*h[i]^2*h[k])
-g[i,k]^2*d[k](h[k])/(2880*h[k]^3)
-7*d[k](g[i,k]/h[k])*d[i](h[i])/(1920*h[i]^2)
-7*d[i](g[i,k])*d[k](h[k])/(5760*h[i]*h[k]^2)
-41*d[i](g[i,k])*d[i](h[i])*h[k]/(5760*h[i]^4)
d[i](h[i]*g[i,k])*d[k](h[k])/(2880*h[k]^4)
-113*g[i,k]*d[i](g[i,k])/(5760*h[i]^2)
(3*d[i](g[i,k])+d[k](g[i,k]))*g[i,k]/(1440*h[k]^2)
-d[i](g[i,k])*h[k]/(576*D[i,k]*h[i]^3)
-d[k](g[i,k])/(576*D[i,k]*h[i]*h[k])
-g[i,k]^3/(240*h[i]*h[k])
-g[k,l]*d[i](h[i]*g[i,l])/(2880*h[k]*h[l]^2)
g[i,l]^2*g[k,l]/(2880*h[k]*h[l])
-g[i,k]*g[i,l]^2/(240*h[i]*h[k])
-g[k,l]*d[i](g[i,k])/(2880*h[i]*h[l])
D[l,k]*g[i,k]*d[l](g[k,l])/(1152*D[i,l]*h[i]*h[l])
D[k,l]*g[i,k]*g[k,l]*d[i](g[i,l])/(144*h[i]^2)
h[l]*g[i,k]*d[i](g[i,l])/(1440*h[i]^2*h[k])
h[k]*D[k,l]*g[k,l]*d[i](g[i,l])/(1152*D[i,k]*h[i]^3)
h[l]*D[i,k]*g[i,k]^2*d[i](g[i,l])/(40*h[i]^3)
)TABLE";

}  // namespace frob::g2
