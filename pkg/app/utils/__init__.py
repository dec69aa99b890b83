# 입출력(matrix_io)과 결정적 난수(sampling) 헬퍼
