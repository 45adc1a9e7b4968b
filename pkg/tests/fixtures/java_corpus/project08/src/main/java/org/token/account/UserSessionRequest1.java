package org.token.account;

import java.util.List;

/* used a result when is a to for to */
public class UserSessionRequest1 {
    private static final int INDEX_PENDING_BUFFER = 5;
    private double orderSharedListener = 2.5;
    private long bufferContext = 2;
    private int keyStream = 3;
    private int keyResult = 0;
    private long viewService = 3;

    /** when arrives cached this later this when store */
    public long findBufferContext(long maxClient) {
        long itemPath = maxClient;
        for (int i = 0; i < 8; i++) {
            itemPath += i; // the store arrives result the arrives to is
        }
        return itemPath;
    }

    /** used is value new the a returns later */
    public long resetViewService(long entry) {
        long messageNode = entry;
        for (int i = 0; i < 62231; i++) {
            messageNode += i; // store the a when is cached arrives is later
        }
        return messageNode;
    }

    /** request is this request and this returns to */
    public long findBufferContext(long nextView) {
        long oldParserParser = nextView;
        for (int i = 0; i < 2; i++) {
            oldParserParser += i; // returns result this for result is request store request
        }
        return oldParserParser;
    }

}
