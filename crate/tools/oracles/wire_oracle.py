# Arbitrary-precision reference for the wire: per-order sum of k-integrals.
# Usage: python3 wire_oracle.py R rho {ret|nr|E} [E]
import mpmath as mp, sys, json
mp.mp.dps=22
def terms(m,R,rho,mode,E=None):
    # returns the three primed-weighted summands for order m
    def Ik(n,x): return mp.besseli(n,x)
    def Kk(n,x): return mp.besselk(n,x)
    def dI(n,x): return mp.besseli(1,x) if n==0 else (Ik(n-1,x)+Ik(n+1,x))/2
    def dK(n,x): return -mp.besselk(1,x) if n==0 else -(Kk(n-1,x)+Kk(n+1,x))/2
    def facs(k):
        if mode=='ret':  # E*Xi as E->inf
            return k**2/2, -k**2/2, k**2
        if mode=='nr':
            return k, mp.mpf(0), k
        s=mp.sqrt(E*E+k*k)
        return s-E, E*E/s-E, k*k/s
    cache={}
    def f(k,c):
        key=(k,c)
        if key in cache: return cache.pop(key)
        a,b=k*R,k*rho
        f1,f2,f3=facs(k)
        IK=Ik(m,a)/Kk(m,a); IKp=dI(m,a)/dK(m,a)
        kb=Kk(m,b); dkb=dK(m,b); q=(mp.mpf(m)/(k*rho))**2
        v=[f1*IK*dkb**2+q*f2*IKp*kb**2, f2*IKp*dkb**2+q*f1*IK*kb**2, f3*IK*kb**2]
        v=[2/mp.pi*k*x for x in v]
        for cc in range(3):
            if cc!=c: cache[(k,cc)]=v[cc]
        return v[c]
    d=rho-R
    pts=[0, mp.mpf(m+1)/rho/4, max(mp.mpf(m)/rho,1/d), 4*max(mp.mpf(m)/rho,1/d), mp.inf]
    w=mp.mpf(1)/2 if m==0 else 1
    return [w*mp.quad(lambda k:f(k,c),pts) for c in range(3)]
def xi(R,rho,mode,E=None,tol=mp.mpf('1e-14')):
    R=mp.mpf(R);rho=mp.mpf(rho)
    E=None if E is None else mp.mpf(E)
    tot=[mp.mpf(0)]*3; m=0; small=0; per=[]
    while True:
        t=terms(m,R,rho,mode,E); per.append(t)
        tot=[tot[i]+t[i] for i in range(3)]
        if m>2 and all(abs(t[i])<=tol*abs(tot[i]) for i in range(3)):
            small+=1
            if small>=3: break
        else: small=0
        sys.stderr.write('m=%d %s\n'%(m,mp.nstr(t[0],8))); m+=1
    return tot,per
if __name__=='__main__':
    R,rho,mode=sys.argv[1],sys.argv[2],sys.argv[3]
    E=sys.argv[4] if len(sys.argv)>4 else None
    tot,per=xi(R,rho,mode,E)
    print(json.dumps({'R':R,'rho':rho,'mode':mode,'E':E,'xi':[mp.nstr(v,22) for v in tot],'nterms':len(per),
      'per_m':[[mp.nstr(v,22) for v in t] for t in per]}))
