# running example, three rows of a a b linked by c
ts A
states 0 1 2 3 4 5 6 7 8 9 10 11
events a b c
initial 0
trans 0 a 1
trans 1 a 2
trans 2 b 3
trans 4 a 5
trans 5 a 6
trans 6 b 7
trans 8 a 9
trans 9 a 10
trans 10 b 11
trans 0 c 4
trans 4 c 8
trans 3 c 7
trans 7 c 11
