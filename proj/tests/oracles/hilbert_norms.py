# Independent oracle: (a,b)_p = +1 iff b is a norm from Q_p(sqrt a), judged on square classes.
from itertools import product
def v(n,p):
    c=0
    while n%p==0: n//=p; c+=1
    return c
def cls(n,p,k):
    # square class of integer n (nonzero mod p^k with small valuation)
    e=v(n,p); u=n//p**e
    if p==2: return (e%2, u%8)
    return (e%2, pow(u%p,(p-1)//2,p))
def red(a,p):
    e=v(a,p); return a//p**(e-e%2)
def sym(a,b,p):
    a=red(a,p); b=red(b,p)
    k = 9 if p==2 else 4
    m=p**k
    # a square => +1
    if cls(a,p,k)==cls(1,p,k): return 1
    norms=set()
    for x in range(m if p==2 else p**3):
        for y in range(m if p==2 else p**3):
            n=x*x-a*y*y
            if n==0: continue
            if v(n,p) <= 2: norms.add(cls(n,p,k))
    return 1 if cls(b,p,k) in norms else -1
vals=[-7,-6,-5,-3,-2,-1,1,2,3,5,6,7,10,-10]
rows=[]
for p in [2,3,5,7]:
    for a in vals:
        for b in vals:
            if abs(a)<=abs(b):
                rows.append((a,b,p,sym(a,b,p)))
print(len(rows))
with open('hilbert_table.inc','w') as f:
    for r in rows: f.write("{%d, %d, %d, %d},\n"%r)
