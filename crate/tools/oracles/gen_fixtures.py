# Regenerates the frozen reference values in crates/core/tests/fixtures.
# Usage: python3 gen_fixtures.py {bessel|wire|misc|grid|force} ...
import json, os, sys
import mpmath as mp
import wire_oracle
OUT=os.path.join(os.path.dirname(os.path.abspath(__file__)),'..','..','crates','core','tests','fixtures')+os.sep
mp.mp.dps=40
def s(v, n=25): return mp.nstr(v, n, min_fixed=1, max_fixed=0)

def I(m,x): return mp.besseli(m,x)
def K(m,x):
    # upward recurrence is stable for K
    with mp.workdps(mp.mp.dps+20):
        a,b=mp.besselk(0,x),mp.besselk(1,x)
        for n in range(1,m):
            a,b=b,a+2*n/x*b
        return +(a if m==0 else b)

def bessel():
    ms=[0,1,2,3,5,10,20,50,100,200,500,1000]
    xs=[1e-4,1e-3,1e-2,0.1,0.5,1.0,2.5,7.0,10.0,30.0,100.0,300.0,1000.0,1e4]
    rows=["m,x,I_m,K_m,dI_m,dK_m"]
    for m in ms:
        for x in xs:
            X=mp.mpf(x)
            i_=I(m,X); k_=K(m,X)
            di=(I(m+1,X)+I(abs(m-1),X))/2
            dk=-(K(m+1,X)+K(abs(m-1),X))/2
            rows.append(f"{m},{x!r},{s(i_)},{s(k_)},{s(di)},{s(dk)}")
    open(OUT+'bessel.csv','w').write("\n".join(rows)+"\n")

def wire():
    d={}
    for key,mode,E in [('E0.1','E','0.1'),('E1','E','1'),('E10','E','10'),('nr','nr',None),('ret','ret',None)]:
        with mp.workdps(22):
            tot,per=wire_oracle.xi('1','2',mode,E)
            d[key]={'xi':[mp.nstr(v,22) for v in tot],'per_m':[[mp.nstr(v,22) for v in t] for t in per[:12]]}
    json.dump({'R':'1','rho':'2','note':'per_m[0] carries the primed weight 1/2','cases':d},open(OUT+'wire_1_2.json','w'),indent=1)

def approx(R,rho):
    R=mp.mpf(R); rho=mp.mpf(rho); d=rho-R; a=R/d; b=rho/d; r=R/rho
    def q(f): return mp.quad(f,[0,mp.mpf(1)/4,1,4,20,mp.inf])
    Jr=q(lambda t: t**3*I(0,t*a)/K(0,t*a)*K(1,t*b)**2)
    Jp=q(lambda t: t**3*I(1,t*a)/K(1,t*a)*K(1,t*b)**2)
    Jz=q(lambda t: t**3*I(0,t*a)/K(0,t*a)*K(0,t*b)**2)
    def G(x):
        s1=mp.sqrt(1+x*x); s2=mp.sqrt(1+r*r*x*x)
        A=r**2*((1+s1)/(1+s2))**2*mp.exp(2*(s2-s1))
        return A*(A*A+4*A+1)/(1-A)**4
    Xr=q(lambda x: x*(mp.sqrt(1+x*x)+1/mp.sqrt(1+x*x))*G(x))
    Xz=q(lambda x: x**3/mp.sqrt(1+x*x)*G(x))
    large=[(Jr/d**4+Xr/rho**4)/(2*mp.pi),(Jp/d**4+Xr/rho**4)/(2*mp.pi),(Jz/d**4+Xz/rho**4)/mp.pi]
    dI1=lambda x: I(0,x)-I(1,x)/x
    dK1=lambda x: -K(0,x)-K(1,x)/x
    S1=q(lambda t: t*(t*t*I(0,t*a)/K(0,t*a)*K(1,t*b)**2 - 2/b**2*dI1(t*a)/dK1(t*a)*K(1,t*b)**2))
    S2=q(lambda t: t*(t*t+2/b**2)*I(1,t*a)/K(1,t*a)*K(1,t*b)**2 - 2*t**3*dI1(t*a)/dK1(t*a)*dK1(t*b)**2)
    small=[S1/(2*mp.pi*d**4),S2/(2*mp.pi*d**4),Jz/(mp.pi*d**4)]
    return large, small

def plane(dd,E):
    dd=mp.mpf(dd);E=mp.mpf(E);a=2*dd*E
    perp=mp.quad(lambda e: mp.exp(-a*e)/(1+e*e)**2,[0,1,mp.inf])
    para=mp.quad(lambda e: mp.exp(-a*e)*(1-e*e)/(1+e*e)**3,[0,1,mp.inf])
    pre=1/(2*mp.pi*dd**3)
    return [pre*perp,pre*para,pre*para]

def brackets(eta,phi):
    extra=int(max(0,-4*mp.log10(eta)))+10 if eta>0 else 0
    with mp.workdps(mp.mp.dps+extra):
        return [+v for v in _brackets(mp.mpf(eta),mp.mpf(phi))]

def _brackets(eta,phi):
    h=eta*eta; S=mp.sin(phi)**2; c=mp.cos(phi); w=mp.sqrt(1+h); u=h+S
    fr=(3*h*h+6*h+4)/(h*h*w**3)-4/(h*h)+4*((2*h+1)*S-h)/u**3+c/(w**3*u**3)*((2+h)*S*S+2*S*(3*h*h+6*h+2)-h*(3*h*h+6*h+4))
    fp=(3*h**3+6*h*h+10*h+4)/(h*h*w**5)-4/(h*h)+4*((1-2*h)*S+h)/u**3+c/(w**5*u**3)*((2-2*h-h*h)*S*S+2*S*(2+2*h-6*h*h-3*h**3)+h*(3*h**3+6*h*h+10*h+4))
    fz=(9*h*h+10*h+4)/(h*h*w**5)-4/(h*h)+4*(S-h)/u**3-c/(w**5*u**3)*((h-2)*S*S+2*(h*h-4*h-2)*S+h*(9*h*h+10*h+4))
    return [fr,fp,fz]

def halfplane(rho,phi,E):
    rho=mp.mpf(rho);E=mp.mpf(E)
    pts=[0,mp.sin(phi)/4,mp.sin(phi),1,4,mp.inf] if phi<mp.pi/2 else [0,mp.mpf(1)/4,1,4,mp.inf]
    pre=1/(16*mp.pi*rho**3)
    return [pre*mp.quad(lambda e: mp.exp(-2*rho*E*e)*brackets(e,phi)[i],pts) for i in range(3)]

def main():
    which=sys.argv[1:]
    if 'bessel' in which: bessel()
    if 'wire' in which: wire()
    if 'misc' in which:
        out={}
        mp.mp.dps=30
        L,S=approx(1,'1.3'); out['large_radius_1_1.3']=[s(v) for v in L]
        L2,S2=approx(1,50); out['small_radius_1_50']=[s(v) for v in S2]
        out['large_radius_1_50']=[s(v) for v in L2]
        out['small_radius_1_1.3']=[s(v) for v in S]
        out['plane_1_1']=[s(v) for v in plane(1,1)]
        phi=2*mp.pi/3
        out['halfplane_1_2pi3_1']=[s(v) for v in halfplane(1,phi,1)]
        out['halfplane_1_2pi3_1_phi']=s(phi)
        json.dump(out,open(OUT+'misc.json','w'),indent=1)
    if 'grid' in which:
        mp.mp.dps=60
        rows=["eta,phi,f_rho,f_phi,f_z"]
        for phi in [0.1, 0.7853981633974483, 1.5707963267948966, 2.0943951023931953, 2.356194490192345, 3.0, 3.140592653589793, 3.141592653589793]:
            for eta in [1e-6,1e-4,1e-3,1e-2,0.05,0.1,0.141,0.15,0.5,1.0,3.0,10.0]:
                f=brackets(mp.mpf(eta),mp.mpf(phi))
                rows.append(f"{eta!r},{phi!r},"+",".join(s(v,22) for v in f))
        open(OUT+'halfplane_brackets.csv','w').write("\n".join(rows)+"\n")
    if 'force' in which:
        mp.mp.dps=30
        rho0=mp.mpf(1);phi0=3*mp.pi/4;E=mp.mpf(50)
        W=lambda r,p: -sum(halfplane(r,p,E))/3
        dr=mp.diff(lambda r: W(r,phi0),rho0)
        dp=mp.diff(lambda p: W(rho0,p),phi0)
        F=[-dr,-dp/rho0]; n=mp.sqrt(F[0]**2+F[1]**2)
        json.dump({'rho':'1','phi':s(phi0),'E':'50','e_rho':s(F[0]/n),'e_phi':s(F[1]/n)},open(OUT+'force_direction.json','w'),indent=1)
main()
